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
 * @file inference.hpp
 * Maximum-likelihood training, MAP queries and partition function
 * estimation on top of the samplers.
 *
 * The likelihood gradient in the overcomplete parametrization is the
 * moment gap E_model[phi] - E_data[phi]. The model moments can come
 * from the exact oracle, from accepted circuit shots, or from a Gibbs
 * chain; the data term is always exact.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcgm/brute_force.hpp"
#include "qcgm/graphical_model.hpp"
#include "qcgm/samplers.hpp"
#include "qcgm/statevector.hpp"

namespace qcgm {

enum class GradientSource : std::uint8_t {
  ExactOracle,
  QcgmSimulated,
  Gibbs,
};

struct GradientResult {
  std::vector<double> gradient;
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  /** True when a sampling source produced no usable samples, in which
   * case the gradient vector is all zeros and must not be trusted. */
  bool empty_batch = false;
};

/**
 * Gradient of the average negative log-likelihood at @p model.
 * @p sample_budget is the shot count (circuit source) or emitted chain
 * length (Gibbs source); the exact source ignores it.
 */
GradientResult gradient(const GraphicalModel &model, const Dataset &data,
                        GradientSource source, std::uint64_t sample_budget,
                        std::uint64_t seed, const NoiseConfig &noise = {});

struct AdamConfig {
  double alpha = 0.1;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::uint32_t iterations = 30;
  std::uint64_t grad_samples = 10000;
  GradientSource source = GradientSource::ExactOracle;
  std::uint64_t seed = 0;
  NoiseConfig noise;
};

/** Snapshot of iterate i of a training run, before the i-th update. */
struct TraceRecord {
  std::vector<double> theta;
  /** Exact dataset negative log-likelihood at this iterate. */
  double nll = 0.0;
  /** Circuit acceptance probability at this iterate: the empirical
   * fraction when the gradient came from shots, else the exact value. */
  double delta = 0.0;
  double grad_norm = 0.0;
};

/** Records for iterates 0 .. iterations inclusive. */
struct TrainingTrace {
  std::vector<TraceRecord> records;
  std::vector<std::string> warnings;
};

/**
 * ADAM ascent on the likelihood (descent on the NLL) starting from
 * @p init. Sampling iterations that accept nothing reuse the previous
 * gradient and leave a warning in the trace.
 */
std::pair<GraphicalModel, TrainingTrace> learn_mle(const GraphicalModel &init,
                                                   const Dataset &data,
                                                   const AdamConfig &cfg);

/** Angles of every parameter entry; requires a non-positive model. */
std::vector<double> gamma_parametrization(const GraphicalModel &model);

/** Entrywise inverse of gamma_parametrization. */
std::vector<double> gamma_to_theta_vector(const std::vector<double> &gamma);

/** d theta / d gamma = -4 tan(2 gamma); chain-rule factor for training
 * directly in angle space. */
double dtheta_dgamma(double gamma);

/** Most probable configuration, evaluated through the energy operator. */
std::uint32_t map_estimate(const GraphicalModel &model,
                           std::uint32_t max_n = kDefaultOracleLimit);

struct PartitionEstimate {
  double z = 0.0;
  /** Half width of the 95% normal interval on z; 0 in exact mode. */
  double half_width = 0.0;
  /** Acceptance probability that produced the estimate. */
  double delta = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  /** Normalization shift undone by the rescaling. */
  double shift = 0.0;
  bool exact = false;
};

/**
 * Partition function from the circuit acceptance rate: the acceptance
 * probability of the normalized model times 2^n, rescaled by
 * exp(shift * num_cliques) to undo the normalization.
 */
PartitionEstimate estimate_partition(const GraphicalModel &model,
                                     std::uint64_t shots, std::uint64_t seed,
                                     std::uint32_t limit = kDefaultSimQubitLimit);

/** Same identity with the exact acceptance probability. */
PartitionEstimate estimate_partition_exact(
    const GraphicalModel &model, std::uint32_t limit = kDefaultSimQubitLimit);

}  // namespace qcgm
