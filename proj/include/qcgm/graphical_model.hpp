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
 * @file graphical_model.hpp
 * Discrete binary graphical models in an overcomplete indicator
 * parametrization: one parameter per (clique, local configuration) pair.
 *
 * Bit conventions used everywhere in the library:
 *  - a joint configuration of n binary variables is packed into an
 *    integer whose MOST significant bit is vertex 0, so
 *    x_v = (x >> (n - 1 - v)) & 1;
 *  - a local configuration of clique C = (v_0 < v_1 < ... < v_{k-1}) is
 *    packed the same way, with v_0 as the most significant bit;
 *  - the flat parameter vector lists cliques in model order and, within
 *    a clique, local configurations in increasing packed order.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qcgm {

/** Extracts the bit of @p packed belonging to position @p pos out of @p width. */
inline std::uint32_t bit_at(std::uint64_t packed, std::uint32_t pos,
                            std::uint32_t width) {
  return static_cast<std::uint32_t>((packed >> (width - 1 - pos)) & 1u);
}

class GraphicalModel {
 public:
  /**
   * Builds a model over @p n vertices with the given cliques.
   *
   * Cliques must be non-empty, duplicate-free sets of vertex ids below
   * @p n; vertices inside a clique are sorted on construction. Two
   * cliques over the same vertex set are rejected because their
   * parameters would be redundant. @p theta must be empty (all zeros)
   * or have one entry per (clique, local configuration) pair.
   *
   * @throws std::invalid_argument on any structural violation.
   */
  GraphicalModel(std::uint32_t n,
                 std::vector<std::vector<std::uint32_t>> cliques,
                 std::vector<double> theta = {});

  std::uint32_t num_vertices() const { return n_; }
  const std::vector<std::vector<std::uint32_t>> &cliques() const {
    return cliques_;
  }
  std::size_t num_cliques() const { return cliques_.size(); }

  /** Total parameter count, sum of 2^|C| over cliques. */
  std::size_t num_params() const { return theta_.size(); }

  const std::vector<double> &theta() const { return theta_; }

  /** Offset of clique @p c inside the flat parameter vector. */
  std::size_t param_offset(std::size_t c) const { return offsets_[c]; }

  /** Parameter of clique @p c at packed local configuration @p y. */
  double theta_entry(std::size_t c, std::uint32_t y) const {
    return theta_[offsets_[c] + y];
  }

  /** Packed local configuration induced on clique @p c by global state @p x. */
  std::uint32_t clique_config(std::size_t c, std::uint32_t x) const {
    const auto &cl = cliques_[c];
    std::uint32_t y = 0;
    for (std::uint32_t v : cl) y = (y << 1) | bit_at(x, v, n_);
    return y;
  }

  /** Copy of this model with a different flat parameter vector. */
  GraphicalModel with_theta(std::vector<double> theta) const;

  /**
   * Non-fatal structural diagnostics. Currently reports cliques that
   * are contained in another clique, which makes the parametrization
   * redundant beyond the baseline overcompleteness.
   */
  std::vector<std::string> structural_warnings() const;

 private:
  std::uint32_t n_;
  std::vector<std::vector<std::uint32_t>> cliques_;
  std::vector<std::size_t> offsets_;
  std::vector<double> theta_;
};

/** Indicator feature vector phi(x); entries are 0 or 1, length num_params. */
std::vector<double> phi_vector(const GraphicalModel &model, std::uint32_t x);

/** Inner product theta . phi(x), accumulated clique by clique. */
double log_potential(const GraphicalModel &model, std::uint32_t x);

/** Returns a copy with @p c added to every parameter entry. */
GraphicalModel shift_parameters(const GraphicalModel &model, double c);

/**
 * Shifts parameters so the largest entry becomes 0 and every entry is
 * admissible as a phase angle. Writes the subtracted shift (the former
 * maximum, 0 for an already non-positive model) to @p shift_out when
 * non-null.
 */
GraphicalModel normalize_for_circuit(const GraphicalModel &model,
                                     double *shift_out = nullptr);

/** Weighted collection of observed joint configurations. */
struct Dataset {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> samples;
  /** Per-sample weights; empty means unit weight for every sample. */
  std::vector<double> weights;

  double total_weight() const;
  /** @throws std::invalid_argument if a sample is out of range. */
  void validate() const;
};

}  // namespace qcgm
