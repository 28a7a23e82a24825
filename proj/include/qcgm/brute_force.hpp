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
 * @file brute_force.hpp
 * Exact desk-scale reference computations obtained by enumerating all
 * 2^n configurations. These are the ground truth every sampler and
 * estimator in the library is validated against, so they deliberately
 * avoid any shortcut shared with the code under test.
 */

#include <cstdint>
#include <vector>

#include "qcgm/distribution.hpp"
#include "qcgm/graphical_model.hpp"

namespace qcgm {

/** Largest vertex count the enumeration oracles accept by default. */
inline constexpr std::uint32_t kDefaultOracleLimit = 20;

/**
 * Exact probability mass function, computed as a numerically stable
 * softmax over the log potentials.
 * @throws std::runtime_error if num_vertices exceeds @p max_n.
 */
DenseDistribution brute_force_pmf(const GraphicalModel &model,
                                  std::uint32_t max_n = kDefaultOracleLimit);

struct PartitionValue {
  double z = 0.0;
  double log_z = 0.0;
};

/** Exact partition function via log-sum-exp over all configurations. */
PartitionValue partition_brute(const GraphicalModel &model,
                               std::uint32_t max_n = kDefaultOracleLimit);

/** Exact mean of the indicator features, E_p[phi]; length num_params. */
std::vector<double> moments(const GraphicalModel &model,
                            std::uint32_t max_n = kDefaultOracleLimit);

/** Weighted empirical mean of the indicator features over a dataset. */
std::vector<double> empirical_moments(const GraphicalModel &model,
                                      const Dataset &data);

/** Average negative log-likelihood of @p data under @p model. */
double nll(const GraphicalModel &model, const Dataset &data,
           std::uint32_t max_n = kDefaultOracleLimit);

/**
 * Exact maximizer of the probability mass. Ties resolve to the smallest
 * packed configuration so the result is reproducible.
 */
std::uint32_t map_state_brute(const GraphicalModel &model,
                              std::uint32_t max_n = kDefaultOracleLimit);

}  // namespace qcgm
