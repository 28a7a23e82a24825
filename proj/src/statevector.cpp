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

#include "qcgm/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcgm {

namespace {

void check_register(std::uint32_t m, std::uint32_t limit) {
  if (m == 0) throw std::invalid_argument("empty register");
  if (m > limit) {
    throw std::runtime_error("register of " + std::to_string(m) +
                             " qubits exceeds the simulation limit " +
                             std::to_string(limit));
  }
}

/** Index bit mask of @p qubit under the qubit-0-is-top convention. */
std::uint64_t qubit_mask(std::uint32_t qubit, std::uint32_t m) {
  return std::uint64_t{1} << (m - 1 - qubit);
}

}  // namespace

StateVector prepare_plus(std::uint32_t m, std::uint32_t limit) {
  check_register(m, limit);
  const std::uint64_t dim = std::uint64_t{1} << m;
  const double a = std::pow(2.0, -0.5 * static_cast<double>(m));
  return StateVector{m, std::vector<std::complex<double>>(dim, {a, 0.0})};
}

StateVector prepare_zero(std::uint32_t m, std::uint32_t limit) {
  check_register(m, limit);
  const std::uint64_t dim = std::uint64_t{1} << m;
  StateVector state{m, std::vector<std::complex<double>>(dim, {0.0, 0.0})};
  state.amp[0] = 1.0;
  return state;
}

void apply_hadamard(StateVector &state, std::uint32_t qubit) {
  const std::uint64_t mask = qubit_mask(qubit, state.m);
  const std::uint64_t dim = state.amp.size();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (j & mask) continue;
    const std::complex<double> a = state.amp[j];
    const std::complex<double> b = state.amp[j | mask];
    state.amp[j] = (a + b) * inv_sqrt2;
    state.amp[j | mask] = (a - b) * inv_sqrt2;
  }
}

void apply_pauli_x(StateVector &state, std::uint32_t qubit) {
  const std::uint64_t mask = qubit_mask(qubit, state.m);
  const std::uint64_t dim = state.amp.size();
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (j & mask) continue;
    std::swap(state.amp[j], state.amp[j | mask]);
  }
}

void apply_pauli_z(StateVector &state, std::uint32_t qubit) {
  const std::uint64_t mask = qubit_mask(qubit, state.m);
  const std::uint64_t dim = state.amp.size();
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (j & mask) state.amp[j] = -state.amp[j];
  }
}

void apply_gate(StateVector &state, const GateIR &gate) {
  if (gate.kind == GateKind::Hadamard) {
    apply_hadamard(state, gate.qubit);
    return;
  }
  const std::uint32_t m = state.m;
  std::uint64_t mask = qubit_mask(gate.success_qubit, m);
  std::uint64_t want = gate.success_value ? mask : 0;
  for (std::size_t k = 0; k < gate.clique_qubits.size(); ++k) {
    const std::uint64_t bit = qubit_mask(gate.clique_qubits[k], m);
    mask |= bit;
    if (bit_at(gate.y, static_cast<std::uint32_t>(k),
               static_cast<std::uint32_t>(gate.clique_qubits.size()))) {
      want |= bit;
    }
  }
  const double base = gate.adjoint ? -2.0 * gate.gamma : 2.0 * gate.gamma;
  const std::complex<double> on_zero = std::polar(1.0, base);
  const std::complex<double> on_one = std::conj(on_zero);
  const std::uint64_t embed = qubit_mask(gate.embedding_qubit, m);
  const std::uint64_t dim = state.amp.size();
  for (std::uint64_t j = 0; j < dim; ++j) {
    if ((j & mask) != want) continue;
    state.amp[j] *= (j & embed) ? on_one : on_zero;
  }
}

double norm_squared(const StateVector &state) {
  double acc = 0.0;
  for (const auto &a : state.amp) acc += std::norm(a);
  return acc;
}

StateVector run_circuit(const CircuitIR &circuit, std::uint32_t limit) {
  StateVector state = prepare_plus(circuit.layout.total(), limit);
  for (const GateIR &gate : circuit.gates) apply_gate(state, gate);
  return state;
}

bool NoiseConfig::enabled() const {
  if (depolarizing > 0.0) return true;
  return std::any_of(readout_flip.begin(), readout_flip.end(),
                     [](double p) { return p > 0.0; });
}

void NoiseConfig::validate(std::uint32_t m) const {
  if (!(depolarizing >= 0.0 && depolarizing <= 0.5)) {
    throw std::invalid_argument("depolarizing probability outside [0, 1/2]");
  }
  if (!readout_flip.empty() && readout_flip.size() != m) {
    throw std::invalid_argument("readout flip vector length must equal the "
                                "register size");
  }
  for (double p : readout_flip) {
    if (!(p >= 0.0 && p <= 0.5)) {
      throw std::invalid_argument("readout flip probability outside [0, 1/2]");
    }
  }
}

NoiseConfig NoiseConfig::depolarizing_only(double p) {
  NoiseConfig cfg;
  cfg.depolarizing = p;
  return cfg;
}

NoiseConfig NoiseConfig::readout_uniform(double p, std::uint32_t m) {
  NoiseConfig cfg;
  cfg.readout_flip.assign(m, p);
  return cfg;
}

namespace {

ShotRecord split_index(std::uint64_t j, const QubitLayout &layout) {
  const std::uint32_t k = layout.num_cliques;
  ShotRecord rec;
  rec.success = static_cast<std::uint32_t>(j & ((std::uint64_t{1} << k) - 1));
  rec.embedding = static_cast<std::uint32_t>((j >> k) & 1);
  rec.x = static_cast<std::uint32_t>(j >> (k + 1));
  rec.accepted = rec.success == 0;
  return rec;
}

std::uint64_t draw_index(const std::vector<double> &cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) return cdf.size() - 1;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

std::vector<double> cumulative(const StateVector &state) {
  std::vector<double> cdf(state.amp.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < state.amp.size(); ++j) {
    acc += std::norm(state.amp[j]);
    cdf[j] = acc;
  }
  return cdf;
}

void involved_qubits(const GateIR &gate, std::vector<std::uint32_t> &out) {
  out.clear();
  if (gate.kind == GateKind::Hadamard) {
    out.push_back(gate.qubit);
    return;
  }
  out = gate.clique_qubits;
  out.push_back(gate.embedding_qubit);
  out.push_back(gate.success_qubit);
}

/** Runs one noisy trajectory and returns the measured basis index. */
std::uint64_t noisy_trajectory(const CircuitIR &circuit,
                               const NoiseConfig &noise, PhiloxStream &rng,
                               std::uint32_t limit) {
  StateVector state = prepare_plus(circuit.layout.total(), limit);
  std::vector<std::uint32_t> qubits;
  for (const GateIR &gate : circuit.gates) {
    apply_gate(state, gate);
    if (noise.depolarizing <= 0.0) continue;
    involved_qubits(gate, qubits);
    for (std::uint32_t q : qubits) {
      if (rng.next_double() >= noise.depolarizing) continue;
      switch (static_cast<int>(rng.next_double() * 3.0)) {
        case 0: apply_pauli_x(state, q); break;
        case 1: apply_pauli_z(state, q); break;
        default:
          apply_pauli_x(state, q);
          apply_pauli_z(state, q);
          break;
      }
    }
  }
  const std::vector<double> cdf = cumulative(state);
  std::uint64_t j = draw_index(cdf, rng.next_double() * cdf.back());
  if (!noise.readout_flip.empty()) {
    const std::uint32_t m = state.m;
    const QubitLayout &layout = circuit.layout;
    for (std::uint32_t q = 0; q < m; ++q) {
      if (q == layout.embedding_qubit()) continue;  // never read out
      if (noise.readout_flip[q] <= 0.0) continue;
      if (rng.next_double() < noise.readout_flip[q]) {
        j ^= qubit_mask(q, m);
      }
    }
  }
  return j;
}

}  // namespace

ExactConditional exact_conditional(const CircuitIR &circuit,
                                   std::uint32_t limit) {
  const StateVector state = run_circuit(circuit, limit);
  const QubitLayout &layout = circuit.layout;
  const std::uint32_t k = layout.num_cliques;
  const std::uint64_t states = std::uint64_t{1} << layout.n;

  ExactConditional out;
  out.conditional.n = layout.n;
  out.conditional.p.assign(states, 0.0);
  // Accepted readouts have all low success bits 0; the embedding qubit
  // contributes both of its branches to the same vertex outcome.
  for (std::uint64_t x = 0; x < states; ++x) {
    const std::uint64_t base = x << (k + 1);
    const double mass = std::norm(state.amp[base]) +
                        std::norm(state.amp[base | (std::uint64_t{1} << k)]);
    out.conditional.p[x] = mass;
    out.success_prob += mass;
  }
  if (!(out.success_prob > 0.0)) {
    throw std::domain_error("circuit accepts with probability zero");
  }
  for (double &v : out.conditional.p) v /= out.success_prob;
  return out;
}

std::vector<ShotRecord> sample_shots(const CircuitIR &circuit,
                                     std::uint64_t shots, std::uint64_t seed,
                                     const NoiseConfig &noise,
                                     std::uint32_t limit) {
  noise.validate(circuit.layout.total());
  std::vector<ShotRecord> records;
  records.reserve(shots);
  if (!noise.enabled()) {
    const StateVector state = run_circuit(circuit, limit);
    const std::vector<double> cdf = cumulative(state);
    for (std::uint64_t s = 0; s < shots; ++s) {
      PhiloxStream rng(seed, s);
      const std::uint64_t j = draw_index(cdf, rng.next_double() * cdf.back());
      records.push_back(split_index(j, circuit.layout));
    }
    return records;
  }
  for (std::uint64_t s = 0; s < shots; ++s) {
    PhiloxStream rng(seed, s);
    const std::uint64_t j = noisy_trajectory(circuit, noise, rng, limit);
    records.push_back(split_index(j, circuit.layout));
  }
  return records;
}

}  // namespace qcgm
