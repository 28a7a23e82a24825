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
 * @file samplers.hpp
 * Samplers for graphical model distributions: the circuit-based
 * post-selection sampler and two classical baselines (Gibbs chains and
 * perturb-and-MAP).
 *
 * The circuit route is unbiased by construction: accepted shots are
 * exact draws from the model. Gibbs is asymptotically exact and
 * perturb-and-MAP is biased for multi-factor models; callers can tell
 * the three apart through the note field of the output.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "qcgm/graphical_model.hpp"
#include "qcgm/rng.hpp"
#include "qcgm/statevector.hpp"

namespace qcgm {

struct SamplerOutput {
  std::vector<std::uint32_t> samples;
  /** Shots attempted; for always-accept samplers equals the sample count. */
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  /** Empirical acceptance fraction, 1 for always-accept samplers. */
  double acceptance = 1.0;
  std::string note;
};

/**
 * Post-selection sampler: compiles @p model, draws @p shots readouts
 * and keeps the vertex register of shots whose success ancillas all
 * read 0. With default (absent) noise the kept samples follow the
 * model distribution exactly.
 */
SamplerOutput qcgm_sample(const GraphicalModel &model, std::uint64_t shots,
                          std::uint64_t seed, const NoiseConfig &noise = {},
                          std::uint32_t limit = kDefaultSimQubitLimit);

struct GibbsConfig {
  /** Full sweeps discarded before the first emission. */
  std::uint64_t burn_in = 100;
  /** Sweeps between emissions are max(1, thinning * sweeps_per_sample). */
  std::uint64_t thinning = 100;
  std::uint64_t sweeps_per_sample = 1;
  std::uint64_t seed = 0;
};

/** Exact conditional P(x_v = 1 | all other coordinates of x). */
double gibbs_conditional(const GraphicalModel &model, std::uint32_t x,
                         std::uint32_t v);

/**
 * Single systematic-scan chain (vertices updated in index order) with
 * a uniformly random start. Emits @p num_samples states.
 */
SamplerOutput gibbs_sample(const GraphicalModel &model,
                           std::uint64_t num_samples, const GibbsConfig &cfg);

/**
 * Sum-of-gamma perturbation: (tau/k) * (sum_{i=1..s} G_i - log s) with
 * G_i ~ Gamma(shape 1/k, scale k/i). Summing k independent draws
 * approaches Gumbel(0, tau) as s grows, which is what makes
 * perturb-and-MAP mimic Gumbel-max sampling.
 */
struct SumOfGammaConfig {
  std::uint32_t k = 1;
  std::uint32_t s = 10;
  double tau = 1.0;
  std::uint64_t seed = 0;
};

/** Defaults with k set to the clique count of @p model. */
SumOfGammaConfig sog_defaults(const GraphicalModel &model,
                              std::uint64_t seed = 0);

double sog_noise(const SumOfGammaConfig &cfg, PhiloxStream &rng);

enum class PerturbationKind : std::uint8_t {
  SumOfGamma,  ///< finite-s approximation, hardware-friendly shape
  Gumbel,      ///< exact -log(-log u) draws, for reference
  None,        ///< degenerate: every sample is the unperturbed maximizer
};

/**
 * Perturb-and-MAP: adds one independent perturbation per parameter
 * entry and emits the exact maximizer of the perturbed log potential.
 * Approximate for models with more than one factor; the output note
 * records that no bias correction is applied.
 */
SamplerOutput pam_sample(const GraphicalModel &model, std::uint64_t num_samples,
                         const SumOfGammaConfig &cfg,
                         PerturbationKind kind = PerturbationKind::SumOfGamma);

}  // namespace qcgm
