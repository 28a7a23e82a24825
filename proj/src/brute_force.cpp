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

#include "qcgm/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcgm {

bool DenseDistribution::is_normalized(double tol) const {
  double mass = 0.0;
  for (double v : p) mass += v;
  return std::abs(mass - 1.0) <= tol;
}

void DenseDistribution::normalize() {
  double mass = 0.0;
  for (double v : p) mass += v;
  if (!(mass > 0.0)) {
    throw std::domain_error("cannot normalize a zero-mass table");
  }
  for (double &v : p) v /= mass;
}

namespace {

void check_oracle_size(const GraphicalModel &model, std::uint32_t max_n,
                       const char *what) {
  if (model.num_vertices() > max_n) {
    throw std::runtime_error(std::string(what) + ": model has " +
                             std::to_string(model.num_vertices()) +
                             " vertices, enumeration limit is " +
                             std::to_string(max_n));
  }
}

std::vector<double> all_log_potentials(const GraphicalModel &model) {
  const std::uint64_t states = std::uint64_t{1} << model.num_vertices();
  std::vector<double> lp(states);
  for (std::uint64_t x = 0; x < states; ++x) {
    lp[x] = log_potential(model, static_cast<std::uint32_t>(x));
  }
  return lp;
}

}  // namespace

DenseDistribution brute_force_pmf(const GraphicalModel &model,
                                  std::uint32_t max_n) {
  check_oracle_size(model, max_n, "brute_force_pmf");
  std::vector<double> lp = all_log_potentials(model);
  const double peak = *std::max_element(lp.begin(), lp.end());
  double mass = 0.0;
  for (double &v : lp) {
    v = std::exp(v - peak);
    mass += v;
  }
  for (double &v : lp) v /= mass;
  return DenseDistribution{model.num_vertices(), std::move(lp)};
}

PartitionValue partition_brute(const GraphicalModel &model,
                               std::uint32_t max_n) {
  check_oracle_size(model, max_n, "partition_brute");
  const std::vector<double> lp = all_log_potentials(model);
  const double peak = *std::max_element(lp.begin(), lp.end());
  double acc = 0.0;
  for (double v : lp) acc += std::exp(v - peak);
  PartitionValue out;
  out.log_z = peak + std::log(acc);
  out.z = std::exp(out.log_z);
  return out;
}

std::vector<double> moments(const GraphicalModel &model, std::uint32_t max_n) {
  check_oracle_size(model, max_n, "moments");
  const DenseDistribution pmf = brute_force_pmf(model, max_n);
  std::vector<double> mu(model.num_params(), 0.0);
  for (std::uint32_t x = 0; x < pmf.p.size(); ++x) {
    for (std::size_t c = 0; c < model.num_cliques(); ++c) {
      mu[model.param_offset(c) + model.clique_config(c, x)] += pmf.p[x];
    }
  }
  return mu;
}

std::vector<double> empirical_moments(const GraphicalModel &model,
                                      const Dataset &data) {
  data.validate();
  if (data.n != model.num_vertices()) {
    throw std::invalid_argument("dataset and model disagree on vertex count");
  }
  const double total = data.total_weight();
  if (!(total > 0.0)) {
    throw std::invalid_argument("dataset has no weight");
  }
  std::vector<double> mu(model.num_params(), 0.0);
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    const double w = data.weights.empty() ? 1.0 : data.weights[i];
    for (std::size_t c = 0; c < model.num_cliques(); ++c) {
      mu[model.param_offset(c) + model.clique_config(c, data.samples[i])] += w;
    }
  }
  for (double &v : mu) v /= total;
  return mu;
}

double nll(const GraphicalModel &model, const Dataset &data,
           std::uint32_t max_n) {
  check_oracle_size(model, max_n, "nll");
  data.validate();
  if (data.n != model.num_vertices()) {
    throw std::invalid_argument("dataset and model disagree on vertex count");
  }
  const double total = data.total_weight();
  if (!(total > 0.0)) {
    throw std::invalid_argument("dataset has no weight");
  }
  const double log_z = partition_brute(model, max_n).log_z;
  double acc = 0.0;
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    const double w = data.weights.empty() ? 1.0 : data.weights[i];
    acc += w * (log_z - log_potential(model, data.samples[i]));
  }
  return acc / total;
}

std::uint32_t map_state_brute(const GraphicalModel &model,
                              std::uint32_t max_n) {
  check_oracle_size(model, max_n, "map_state_brute");
  const std::uint64_t states = std::uint64_t{1} << model.num_vertices();
  std::uint32_t best = 0;
  double best_lp = log_potential(model, 0);
  for (std::uint64_t x = 1; x < states; ++x) {
    const double lp = log_potential(model, static_cast<std::uint32_t>(x));
    if (lp > best_lp) {
      best_lp = lp;
      best = static_cast<std::uint32_t>(x);
    }
  }
  return best;
}

}  // namespace qcgm
