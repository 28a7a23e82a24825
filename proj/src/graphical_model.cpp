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

#include "qcgm/graphical_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcgm {

GraphicalModel::GraphicalModel(std::uint32_t n,
                               std::vector<std::vector<std::uint32_t>> cliques,
                               std::vector<double> theta)
    : n_(n), cliques_(std::move(cliques)) {
  if (n_ == 0) {
    throw std::invalid_argument("graphical model needs at least one vertex");
  }
  if (cliques_.empty()) {
    throw std::invalid_argument("graphical model needs at least one clique");
  }
  for (auto &cl : cliques_) {
    if (cl.empty()) {
      throw std::invalid_argument("empty clique");
    }
    std::sort(cl.begin(), cl.end());
    if (std::adjacent_find(cl.begin(), cl.end()) != cl.end()) {
      throw std::invalid_argument("repeated vertex inside a clique");
    }
    if (cl.back() >= n_) {
      throw std::invalid_argument("clique vertex id out of range");
    }
    if (cl.size() >= 32) {
      throw std::invalid_argument("clique too large for packed configurations");
    }
  }
  for (std::size_t a = 0; a < cliques_.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques_.size(); ++b) {
      if (cliques_[a] == cliques_[b]) {
        throw std::invalid_argument("duplicate clique over the same vertices");
      }
    }
  }
  offsets_.reserve(cliques_.size());
  std::size_t d = 0;
  for (const auto &cl : cliques_) {
    offsets_.push_back(d);
    d += std::size_t{1} << cl.size();
  }
  if (theta.empty()) {
    theta_.assign(d, 0.0);
  } else if (theta.size() == d) {
    theta_ = std::move(theta);
  } else {
    throw std::invalid_argument("parameter vector length does not match "
                                "the clique structure");
  }
  for (double t : theta_) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("parameters must be finite");
    }
  }
}

GraphicalModel GraphicalModel::with_theta(std::vector<double> theta) const {
  return GraphicalModel(n_, cliques_, std::move(theta));
}

std::vector<std::string> GraphicalModel::structural_warnings() const {
  std::vector<std::string> warnings;
  for (std::size_t a = 0; a < cliques_.size(); ++a) {
    for (std::size_t b = 0; b < cliques_.size(); ++b) {
      if (a == b || cliques_[a].size() >= cliques_[b].size()) continue;
      if (std::includes(cliques_[b].begin(), cliques_[b].end(),
                        cliques_[a].begin(), cliques_[a].end())) {
        warnings.push_back("clique " + std::to_string(a) +
                           " is contained in clique " + std::to_string(b) +
                           "; its parameters are redundant");
        break;
      }
    }
  }
  return warnings;
}

std::vector<double> phi_vector(const GraphicalModel &model, std::uint32_t x) {
  std::vector<double> phi(model.num_params(), 0.0);
  for (std::size_t c = 0; c < model.num_cliques(); ++c) {
    phi[model.param_offset(c) + model.clique_config(c, x)] = 1.0;
  }
  return phi;
}

double log_potential(const GraphicalModel &model, std::uint32_t x) {
  double acc = 0.0;
  for (std::size_t c = 0; c < model.num_cliques(); ++c) {
    acc += model.theta_entry(c, model.clique_config(c, x));
  }
  return acc;
}

GraphicalModel shift_parameters(const GraphicalModel &model, double c) {
  std::vector<double> theta = model.theta();
  for (double &t : theta) t += c;
  return model.with_theta(std::move(theta));
}

GraphicalModel normalize_for_circuit(const GraphicalModel &model,
                                     double *shift_out) {
  const double max_entry =
      *std::max_element(model.theta().begin(), model.theta().end());
  const double shift = max_entry > 0.0 ? max_entry : 0.0;
  if (shift_out != nullptr) *shift_out = shift;
  return shift == 0.0 ? model : shift_parameters(model, -shift);
}

double Dataset::total_weight() const {
  if (weights.empty()) return static_cast<double>(samples.size());
  double acc = 0.0;
  for (double w : weights) acc += w;
  return acc;
}

void Dataset::validate() const {
  if (n == 0 || n >= 32) {
    throw std::invalid_argument("dataset needs 1 <= n < 32");
  }
  if (!weights.empty() && weights.size() != samples.size()) {
    throw std::invalid_argument("weight vector length does not match samples");
  }
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t s : samples) {
    if (s >= limit) {
      throw std::invalid_argument("sample exceeds the configuration range");
    }
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be finite and non-negative");
    }
  }
}

}  // namespace qcgm
