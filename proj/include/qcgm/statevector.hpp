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
 * @file statevector.hpp
 * Dense statevector simulation of compiled circuits, exact conditional
 * extraction and shot sampling with optional toy noise.
 *
 * Shots are reproducible at the individual shot level: shot s draws
 * from PhiloxStream(seed, s), so the same (circuit, seed) pair yields
 * a bit-identical record sequence no matter how shots are batched or
 * threaded.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include "qcgm/circuit.hpp"
#include "qcgm/distribution.hpp"
#include "qcgm/rng.hpp"

namespace qcgm {

/** Registers larger than this are refused by default (16 GiB of
 * amplitudes is past desk scale). */
inline constexpr std::uint32_t kDefaultSimQubitLimit = 26;

struct StateVector {
  std::uint32_t m = 0;
  std::vector<std::complex<double>> amp;
};

StateVector prepare_plus(std::uint32_t m,
                         std::uint32_t limit = kDefaultSimQubitLimit);
StateVector prepare_zero(std::uint32_t m,
                         std::uint32_t limit = kDefaultSimQubitLimit);

void apply_hadamard(StateVector &state, std::uint32_t qubit);
void apply_pauli_x(StateVector &state, std::uint32_t qubit);
void apply_pauli_z(StateVector &state, std::uint32_t qubit);
void apply_gate(StateVector &state, const GateIR &gate);

double norm_squared(const StateVector &state);

/** All-plus input, then every gate of @p circuit in order. */
StateVector run_circuit(const CircuitIR &circuit,
                        std::uint32_t limit = kDefaultSimQubitLimit);

/**
 * Toy hardware noise. Depolarizing noise hits every qubit a gate acts
 * on, independently with the given probability, drawing the Pauli
 * uniformly from {X, Z, XZ}. Readout flips apply per measured qubit.
 * Probabilities live in [0, 1/2].
 */
struct NoiseConfig {
  double depolarizing = 0.0;
  /** Per-qubit flip probability; empty disables readout noise,
   * otherwise the length must equal the register size. */
  std::vector<double> readout_flip;

  bool enabled() const;
  /** @throws std::invalid_argument on out-of-range probabilities. */
  void validate(std::uint32_t m) const;

  static NoiseConfig depolarizing_only(double p);
  static NoiseConfig readout_uniform(double p, std::uint32_t m);
};

/** One measured shot, already split into the register fields. */
struct ShotRecord {
  std::uint32_t x = 0;        ///< vertex qubits, vertex 0 = top bit
  std::uint32_t embedding = 0;
  std::uint32_t success = 0;  ///< packed success ancillas, clique 0 = top bit
  bool accepted = false;      ///< success == 0
};

struct ExactConditional {
  /** Distribution of the vertex register given all success ancillas
   * read 0, with the embedding qubit summed out. */
  DenseDistribution conditional;
  /** Probability of the all-zero success readout. */
  double success_prob = 0.0;
};

/** Exact amplitudes route; no sampling involved. */
ExactConditional exact_conditional(const CircuitIR &circuit,
                                   std::uint32_t limit = kDefaultSimQubitLimit);

/**
 * Draws @p shots measurement records. Without noise the joint readout
 * distribution is computed once and inverted per shot; with noise each
 * shot re-runs the circuit as an independent trajectory.
 */
std::vector<ShotRecord> sample_shots(const CircuitIR &circuit,
                                     std::uint64_t shots, std::uint64_t seed,
                                     const NoiseConfig &noise = {},
                                     std::uint32_t limit = kDefaultSimQubitLimit);

}  // namespace qcgm
