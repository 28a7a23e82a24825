// Copyright 2026 The QCGM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file pauli_stats.hpp
 * Symbolic diagonal operators that mirror the indicator features of a
 * graphical model. Each feature becomes a tensor product over all
 * vertices with, per vertex, either the identity or a projector built
 * from Z: (I - Z)/2 fixes the vertex to 1 and (I + Z)/2 fixes it to 0.
 * Products of this shape are diagonal in the computational basis, so
 * they are kept symbolically and evaluated entry by entry; nothing
 * exponential in n is stored unless a caller explicitly materializes.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "qcgm/graphical_model.hpp"

namespace qcgm {

enum class SymbolicFactor : std::uint8_t {
  Identity,  ///< vertex not in the clique
  ProjOne,   ///< (I - Z)/2, selects vertex value 1
  ProjZero,  ///< (I + Z)/2, selects vertex value 0
};

/**
 * Diagonal projector onto the event "clique C takes local configuration
 * y". Stored as one factor per vertex, vertex 0 first.
 */
struct PauliMarkovStatistic {
  std::uint32_t n = 0;
  std::vector<SymbolicFactor> factors;
  /** Sorted vertex ids the projector constrains. */
  std::vector<std::uint32_t> clique;
  /** Packed local configuration; clique position 0 is the top bit. */
  std::uint32_t y = 0;
};

/**
 * Builds the statistic for clique @p clique at packed configuration @p y
 * inside a model over @p n vertices.
 * @throws std::invalid_argument on out-of-range vertices or y.
 */
PauliMarkovStatistic build_statistic(const std::vector<std::uint32_t> &clique,
                                     std::uint32_t y, std::uint32_t n);

/** Diagonal entry at basis state @p x; always 0 or 1. */
int statistic_diag_entry(const PauliMarkovStatistic &stat, std::uint32_t x);

/** Rendering like "P1 (x) I (x) P0" for logs and docs. */
std::string to_string(const PauliMarkovStatistic &stat);

/**
 * Full diagonal as a dense vector of length 2^n; refused above
 * @p max_n vertices to keep memory bounded.
 */
std::vector<double> materialize_statistic(const PauliMarkovStatistic &stat,
                                          std::uint32_t max_n = 12);

/**
 * Energy operator of a model: minus the parameter-weighted sum of the
 * indicator statistics, one term per (clique, configuration) pair in
 * flat parameter order.
 */
struct Hamiltonian {
  std::uint32_t n = 0;
  std::vector<double> coefficients;
  std::vector<PauliMarkovStatistic> statistics;
};

Hamiltonian build_hamiltonian(const GraphicalModel &model);

/**
 * Diagonal entry of the energy operator at basis state @p x. Matches
 * -log_potential(model, x) bit for bit because both sides accumulate
 * clique contributions in the same order.
 */
double hamiltonian_diag_entry(const Hamiltonian &h, std::uint32_t x);

}  // namespace qcgm
