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

#include "qcgm/pauli_stats.hpp"

#include <stdexcept>

namespace qcgm {

PauliMarkovStatistic build_statistic(const std::vector<std::uint32_t> &clique,
                                     std::uint32_t y, std::uint32_t n) {
  if (clique.empty()) {
    throw std::invalid_argument("build_statistic: empty clique");
  }
  if (clique.size() >= 32 || y >= (std::uint32_t{1} << clique.size())) {
    throw std::invalid_argument("build_statistic: configuration out of range");
  }
  PauliMarkovStatistic stat;
  stat.n = n;
  stat.factors.assign(n, SymbolicFactor::Identity);
  stat.clique = clique;
  stat.y = y;
  for (std::size_t k = 0; k < clique.size(); ++k) {
    const std::uint32_t v = clique[k];
    if (v >= n) {
      throw std::invalid_argument("build_statistic: vertex out of range");
    }
    if (stat.factors[v] != SymbolicFactor::Identity) {
      throw std::invalid_argument("build_statistic: repeated vertex");
    }
    const std::uint32_t bit =
        bit_at(y, static_cast<std::uint32_t>(k),
               static_cast<std::uint32_t>(clique.size()));
    stat.factors[v] = bit ? SymbolicFactor::ProjOne : SymbolicFactor::ProjZero;
  }
  return stat;
}

int statistic_diag_entry(const PauliMarkovStatistic &stat, std::uint32_t x) {
  for (std::size_t k = 0; k < stat.clique.size(); ++k) {
    const std::uint32_t want =
        bit_at(stat.y, static_cast<std::uint32_t>(k),
               static_cast<std::uint32_t>(stat.clique.size()));
    if (bit_at(x, stat.clique[k], stat.n) != want) return 0;
  }
  return 1;
}

std::string to_string(const PauliMarkovStatistic &stat) {
  std::string out;
  for (std::uint32_t v = 0; v < stat.n; ++v) {
    if (v > 0) out += " (x) ";
    switch (stat.factors[v]) {
      case SymbolicFactor::Identity: out += "I"; break;
      case SymbolicFactor::ProjOne: out += "P1"; break;
      case SymbolicFactor::ProjZero: out += "P0"; break;
    }
  }
  return out;
}

std::vector<double> materialize_statistic(const PauliMarkovStatistic &stat,
                                          std::uint32_t max_n) {
  if (stat.n > max_n) {
    throw std::runtime_error("materialize_statistic: vertex count " +
                             std::to_string(stat.n) + " exceeds limit " +
                             std::to_string(max_n));
  }
  const std::uint64_t states = std::uint64_t{1} << stat.n;
  std::vector<double> diag(states);
  for (std::uint64_t x = 0; x < states; ++x) {
    diag[x] = statistic_diag_entry(stat, static_cast<std::uint32_t>(x));
  }
  return diag;
}

Hamiltonian build_hamiltonian(const GraphicalModel &model) {
  Hamiltonian h;
  h.n = model.num_vertices();
  h.coefficients.reserve(model.num_params());
  h.statistics.reserve(model.num_params());
  for (std::size_t c = 0; c < model.num_cliques(); ++c) {
    const auto &clique = model.cliques()[c];
    const std::uint32_t configs = std::uint32_t{1} << clique.size();
    for (std::uint32_t y = 0; y < configs; ++y) {
      h.coefficients.push_back(model.theta_entry(c, y));
      h.statistics.push_back(build_statistic(clique, y, h.n));
    }
  }
  return h;
}

double hamiltonian_diag_entry(const Hamiltonian &h, std::uint32_t x) {
  // Accumulates in term order and negates once at the end, which keeps
  // the rounding pattern identical to log_potential.
  double acc = 0.0;
  for (std::size_t j = 0; j < h.coefficients.size(); ++j) {
    if (statistic_diag_entry(h.statistics[j], x)) acc += h.coefficients[j];
  }
  return -acc;
}

}  // namespace qcgm
