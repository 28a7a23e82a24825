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
 * @file circuit.hpp
 * Compilation of a graphical model into a diagonal-phase circuit whose
 * post-selected measurement distribution equals the model distribution.
 *
 * Layout over m = n + 1 + |cliques| qubits:
 *  - qubits 0 .. n-1 carry the model vertices (qubit v is vertex v);
 *  - qubit n is the embedding ancilla. Its value steers each clique
 *    block between a phase operator and its adjoint and it is never
 *    measured, which traces it out of the sampled distribution;
 *  - qubit n + 1 + c is the success ancilla of clique c. A sample is
 *    accepted only when every success ancilla reads 0.
 *
 * State indices use the same packing as everywhere else: qubit 0 is the
 * most significant bit of the index.
 *
 * Parameters enter through the angle map gamma = arccos(exp(theta/2))/2,
 * defined for theta <= 0. Models are normalized first so the map always
 * applies; the subtracted shift is carried in the provenance record and
 * restored by the partition estimator.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qcgm/graphical_model.hpp"

namespace qcgm {

/** Entries below this are clamped before the angle map; exp(theta/2)
 * underflows toward the constant pi/4 angle long before the clamp
 * could matter statistically. */
inline constexpr double kThetaFloor = -60.0;

struct QubitLayout {
  std::uint32_t n = 0;            ///< vertex qubits
  std::uint32_t num_cliques = 0;  ///< one success ancilla each

  std::uint32_t embedding_qubit() const { return n; }
  std::uint32_t success_qubit(std::uint32_t c) const { return n + 1 + c; }
  std::uint32_t total() const { return n + 1 + num_cliques; }
};

enum class GateKind : std::uint8_t {
  Hadamard,
  /**
   * Diagonal phase conditioned on one success ancilla and a clique
   * configuration: basis states whose success ancilla equals
   * success_value and whose clique qubits spell y pick up the phase
   * exp(+2i*gamma) when the embedding qubit is 0 and exp(-2i*gamma)
   * when it is 1. The adjoint flag negates both phases.
   */
  CliquePhase,
};

struct GateIR {
  GateKind kind = GateKind::Hadamard;

  /// Hadamard target.
  std::uint32_t qubit = 0;

  // CliquePhase payload.
  std::uint32_t clique_index = 0;
  std::vector<std::uint32_t> clique_qubits;
  std::uint32_t y = 0;  ///< packed over clique_qubits, position 0 = top bit
  std::uint32_t success_qubit = 0;
  std::uint32_t success_value = 0;  ///< 0 or 1
  std::uint32_t embedding_qubit = 0;
  double gamma = 0.0;
  bool adjoint = false;

  static GateIR hadamard(std::uint32_t q);
  static GateIR clique_phase(std::uint32_t clique_index,
                             std::vector<std::uint32_t> clique_qubits,
                             std::uint32_t y, std::uint32_t success_qubit,
                             std::uint32_t success_value,
                             std::uint32_t embedding_qubit, double gamma,
                             bool adjoint);
};

struct CircuitProvenance {
  /** Model actually compiled, after normalization and clamping. */
  GraphicalModel model;
  /** Amount subtracted from every parameter during normalization. */
  double shift = 0.0;
  /** Number of parameter entries clamped at kThetaFloor. */
  std::size_t clamped = 0;
};

struct CircuitIR {
  QubitLayout layout;
  std::vector<GateIR> gates;
  /** Angles in flat parameter order of the compiled model. */
  std::vector<double> gamma;
  CircuitProvenance provenance;
};

/**
 * Angle for one parameter entry; requires theta <= 0.
 * @throws std::domain_error otherwise.
 */
double theta_to_gamma(double theta);

/** Inverse map, 2*log(cos(2*gamma)); requires gamma in [0, pi/4]. */
double gamma_to_theta(double gamma);

/**
 * Compiles @p model. The input is normalized (largest parameter shifted
 * to zero) and entries below kThetaFloor are clamped; both facts are
 * recorded in the provenance. Gate order per clique: the phase pair of
 * every local configuration, then a Hadamard on the clique's success
 * ancilla. The all-plus input state is part of the contract of the
 * simulator, not a gate sequence here.
 */
CircuitIR build_circuit(const GraphicalModel &model);

/**
 * Dense unitary of one clique block (all its gates, in order) over the
 * full register, for cross-checking against operator-level algebra.
 * Refused when the register exceeds @p max_qubits.
 */
Eigen::MatrixXcd materialize_block(const CircuitIR &circuit,
                                   std::size_t clique_index,
                                   std::uint32_t max_qubits = 10);

}  // namespace qcgm
