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

#include "qcgm/circuit.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qcgm {

GateIR GateIR::hadamard(std::uint32_t q) {
  GateIR g;
  g.kind = GateKind::Hadamard;
  g.qubit = q;
  return g;
}

GateIR GateIR::clique_phase(std::uint32_t clique_index,
                            std::vector<std::uint32_t> clique_qubits,
                            std::uint32_t y, std::uint32_t success_qubit,
                            std::uint32_t success_value,
                            std::uint32_t embedding_qubit, double gamma,
                            bool adjoint) {
  GateIR g;
  g.kind = GateKind::CliquePhase;
  g.clique_index = clique_index;
  g.clique_qubits = std::move(clique_qubits);
  g.y = y;
  g.success_qubit = success_qubit;
  g.success_value = success_value;
  g.embedding_qubit = embedding_qubit;
  g.gamma = gamma;
  g.adjoint = adjoint;
  return g;
}

double theta_to_gamma(double theta) {
  if (theta > 0.0) {
    throw std::domain_error("theta_to_gamma: positive parameter " +
                            std::to_string(theta) +
                            "; normalize the model first");
  }
  return 0.5 * std::acos(std::exp(0.5 * theta));
}

double gamma_to_theta(double gamma) {
  if (gamma < 0.0 || gamma > std::numbers::pi / 4.0) {
    throw std::domain_error("gamma_to_theta: angle outside [0, pi/4]");
  }
  return 2.0 * std::log(std::cos(2.0 * gamma));
}

CircuitIR build_circuit(const GraphicalModel &model) {
  double shift = 0.0;
  GraphicalModel compiled = normalize_for_circuit(model, &shift);

  std::size_t clamped = 0;
  {
    std::vector<double> theta = compiled.theta();
    for (double &t : theta) {
      if (t < kThetaFloor) {
        t = kThetaFloor;
        ++clamped;
      }
    }
    if (clamped > 0) compiled = compiled.with_theta(std::move(theta));
  }

  QubitLayout layout{compiled.num_vertices(),
                     static_cast<std::uint32_t>(compiled.num_cliques())};

  std::vector<double> gamma(compiled.num_params());
  std::vector<GateIR> gates;
  gates.reserve(compiled.num_params() * 2 + compiled.num_cliques());

  for (std::size_t c = 0; c < compiled.num_cliques(); ++c) {
    const auto &clique = compiled.cliques()[c];
    const std::uint32_t configs = std::uint32_t{1} << clique.size();
    const std::uint32_t cc = static_cast<std::uint32_t>(c);
    for (std::uint32_t y = 0; y < configs; ++y) {
      const double g = theta_to_gamma(compiled.theta_entry(c, y));
      gamma[compiled.param_offset(c) + y] = g;
      gates.push_back(GateIR::clique_phase(cc, clique, y,
                                           layout.success_qubit(cc), 0,
                                           layout.embedding_qubit(), g,
                                           /*adjoint=*/false));
      gates.push_back(GateIR::clique_phase(cc, clique, y,
                                           layout.success_qubit(cc), 1,
                                           layout.embedding_qubit(), g,
                                           /*adjoint=*/true));
    }
    gates.push_back(GateIR::hadamard(layout.success_qubit(cc)));
  }

  return CircuitIR{layout, std::move(gates), std::move(gamma),
                   CircuitProvenance{std::move(compiled), shift, clamped}};
}

Eigen::MatrixXcd materialize_block(const CircuitIR &circuit,
                                   std::size_t clique_index,
                                   std::uint32_t max_qubits) {
  const std::uint32_t m = circuit.layout.total();
  if (m > max_qubits) {
    throw std::runtime_error("materialize_block: register of " +
                             std::to_string(m) + " qubits exceeds limit " +
                             std::to_string(max_qubits));
  }
  if (clique_index >= circuit.layout.num_cliques) {
    throw std::invalid_argument("materialize_block: no such clique");
  }
  const std::uint32_t success =
      circuit.layout.success_qubit(static_cast<std::uint32_t>(clique_index));
  const Eigen::Index dim = Eigen::Index{1} << m;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  for (const GateIR &gate : circuit.gates) {
    if (gate.kind == GateKind::Hadamard) {
      if (gate.qubit != success) continue;
      const Eigen::Index stride = Eigen::Index{1} << (m - 1 - gate.qubit);
      for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
        if ((r0 & stride) != 0) continue;
        const Eigen::Index r1 = r0 | stride;
        const Eigen::RowVectorXcd top = u.row(r0);
        u.row(r0) = (top + u.row(r1)) * inv_sqrt2;
        u.row(r1) = (top - u.row(r1)) * inv_sqrt2;
      }
    } else {
      if (gate.clique_index != clique_index) continue;
      for (Eigen::Index r = 0; r < dim; ++r) {
        const std::uint64_t idx = static_cast<std::uint64_t>(r);
        if (bit_at(idx, gate.success_qubit, m) != gate.success_value) continue;
        bool match = true;
        for (std::size_t k = 0; k < gate.clique_qubits.size(); ++k) {
          const std::uint32_t want =
              bit_at(gate.y, static_cast<std::uint32_t>(k),
                     static_cast<std::uint32_t>(gate.clique_qubits.size()));
          if (bit_at(idx, gate.clique_qubits[k], m) != want) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        double sign = bit_at(idx, gate.embedding_qubit, m) == 0 ? 1.0 : -1.0;
        if (gate.adjoint) sign = -sign;
        u.row(r) *= std::exp(std::complex<double>(0.0, 2.0 * gate.gamma * sign));
      }
    }
  }
  return u;
}

}  // namespace qcgm
