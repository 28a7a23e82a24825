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

#include "qcgm/samplers.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qcgm/brute_force.hpp"

namespace qcgm {

SamplerOutput qcgm_sample(const GraphicalModel &model, std::uint64_t shots,
                          std::uint64_t seed, const NoiseConfig &noise,
                          std::uint32_t limit) {
  if (shots == 0) {
    throw std::invalid_argument("qcgm_sample: need at least one shot");
  }
  const CircuitIR circuit = build_circuit(model);
  const std::vector<ShotRecord> records =
      sample_shots(circuit, shots, seed, noise, limit);
  SamplerOutput out;
  out.trials = shots;
  for (const ShotRecord &rec : records) {
    if (rec.accepted) out.samples.push_back(rec.x);
  }
  out.accepted = out.samples.size();
  out.acceptance =
      static_cast<double>(out.accepted) / static_cast<double>(out.trials);
  if (circuit.provenance.clamped > 0) {
    out.note = std::to_string(circuit.provenance.clamped) +
               " parameter entries clamped during compilation";
  }
  return out;
}

double gibbs_conditional(const GraphicalModel &model, std::uint32_t x,
                         std::uint32_t v) {
  if (v >= model.num_vertices()) {
    throw std::invalid_argument("gibbs_conditional: vertex out of range");
  }
  const std::uint32_t n = model.num_vertices();
  const std::uint32_t bit = std::uint32_t{1} << (n - 1 - v);
  const std::uint32_t x1 = x | bit;
  const std::uint32_t x0 = x & ~bit;
  double delta = 0.0;
  for (std::size_t c = 0; c < model.num_cliques(); ++c) {
    const auto &clique = model.cliques()[c];
    bool touches = false;
    for (std::uint32_t u : clique) {
      if (u == v) {
        touches = true;
        break;
      }
    }
    if (!touches) continue;
    delta += model.theta_entry(c, model.clique_config(c, x1)) -
             model.theta_entry(c, model.clique_config(c, x0));
  }
  return 1.0 / (1.0 + std::exp(-delta));
}

namespace {

/** Clique indices touching each vertex, precomputed once per chain. */
std::vector<std::vector<std::uint32_t>> vertex_cliques(
    const GraphicalModel &model) {
  std::vector<std::vector<std::uint32_t>> incidence(model.num_vertices());
  for (std::size_t c = 0; c < model.num_cliques(); ++c) {
    for (std::uint32_t v : model.cliques()[c]) {
      incidence[v].push_back(static_cast<std::uint32_t>(c));
    }
  }
  return incidence;
}

void sweep(const GraphicalModel &model,
           const std::vector<std::vector<std::uint32_t>> &incidence,
           std::uint32_t &x, PhiloxStream &rng) {
  const std::uint32_t n = model.num_vertices();
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t bit = std::uint32_t{1} << (n - 1 - v);
    const std::uint32_t x1 = x | bit;
    const std::uint32_t x0 = x & ~bit;
    double delta = 0.0;
    for (std::uint32_t c : incidence[v]) {
      delta += model.theta_entry(c, model.clique_config(c, x1)) -
               model.theta_entry(c, model.clique_config(c, x0));
    }
    const double p1 = 1.0 / (1.0 + std::exp(-delta));
    x = rng.next_double() < p1 ? x1 : x0;
  }
}

}  // namespace

SamplerOutput gibbs_sample(const GraphicalModel &model,
                           std::uint64_t num_samples, const GibbsConfig &cfg) {
  if (num_samples == 0) {
    throw std::invalid_argument("gibbs_sample: need at least one sample");
  }
  if (model.num_vertices() >= 32) {
    throw std::invalid_argument("gibbs_sample: packed states need n < 32");
  }
  const auto incidence = vertex_cliques(model);
  PhiloxStream rng(cfg.seed, 0);
  const std::uint32_t n = model.num_vertices();
  std::uint32_t x =
      static_cast<std::uint32_t>(rng.next_u64() & ((std::uint64_t{1} << n) - 1));

  for (std::uint64_t i = 0; i < cfg.burn_in; ++i) {
    sweep(model, incidence, x, rng);
  }
  const std::uint64_t spacing =
      std::max<std::uint64_t>(1, cfg.thinning * cfg.sweeps_per_sample);
  SamplerOutput out;
  out.samples.reserve(num_samples);
  for (std::uint64_t i = 0; i < num_samples; ++i) {
    for (std::uint64_t j = 0; j < spacing; ++j) {
      sweep(model, incidence, x, rng);
    }
    out.samples.push_back(x);
  }
  out.trials = num_samples;
  out.accepted = num_samples;
  out.acceptance = 1.0;
  return out;
}

SumOfGammaConfig sog_defaults(const GraphicalModel &model, std::uint64_t seed) {
  SumOfGammaConfig cfg;
  cfg.k = static_cast<std::uint32_t>(model.num_cliques());
  cfg.seed = seed;
  return cfg;
}

double sog_noise(const SumOfGammaConfig &cfg, PhiloxStream &rng) {
  if (cfg.k == 0 || cfg.s == 0 || !(cfg.tau > 0.0)) {
    throw std::invalid_argument("sog_noise: need k >= 1, s >= 1, tau > 0");
  }
  const double shape = 1.0 / static_cast<double>(cfg.k);
  double acc = 0.0;
  for (std::uint32_t i = 1; i <= cfg.s; ++i) {
    std::gamma_distribution<double> gamma(shape,
                                          static_cast<double>(cfg.k) / i);
    acc += gamma(rng);
  }
  return cfg.tau / static_cast<double>(cfg.k) *
         (acc - std::log(static_cast<double>(cfg.s)));
}

namespace {

std::uint32_t perturbed_argmax(const GraphicalModel &model,
                               const std::vector<double> &theta) {
  const std::uint32_t n = model.num_vertices();
  const std::uint64_t states = std::uint64_t{1} << n;
  std::uint32_t best = 0;
  double best_lp = 0.0;
  for (std::uint64_t x = 0; x < states; ++x) {
    double lp = 0.0;
    for (std::size_t c = 0; c < model.num_cliques(); ++c) {
      lp += theta[model.param_offset(c) +
                  model.clique_config(c, static_cast<std::uint32_t>(x))];
    }
    if (x == 0 || lp > best_lp) {
      best_lp = lp;
      best = static_cast<std::uint32_t>(x);
    }
  }
  return best;
}

}  // namespace

SamplerOutput pam_sample(const GraphicalModel &model, std::uint64_t num_samples,
                         const SumOfGammaConfig &cfg, PerturbationKind kind) {
  if (num_samples == 0) {
    throw std::invalid_argument("pam_sample: need at least one sample");
  }
  if (model.num_vertices() > kDefaultOracleLimit) {
    throw std::runtime_error("pam_sample: inner maximization enumerates "
                             "states; vertex count too large");
  }
  SamplerOutput out;
  out.samples.reserve(num_samples);
  std::vector<double> theta(model.num_params());
  for (std::uint64_t i = 0; i < num_samples; ++i) {
    PhiloxStream rng(cfg.seed, i);
    for (std::size_t j = 0; j < theta.size(); ++j) {
      double eps = 0.0;
      switch (kind) {
        case PerturbationKind::SumOfGamma:
          eps = sog_noise(cfg, rng);
          break;
        case PerturbationKind::Gumbel:
          eps = -cfg.tau * std::log(-std::log(rng.next_double_open()));
          break;
        case PerturbationKind::None:
          break;
      }
      theta[j] = model.theta()[j] + eps;
    }
    out.samples.push_back(perturbed_argmax(model, theta));
  }
  out.trials = num_samples;
  out.accepted = num_samples;
  out.acceptance = 1.0;
  out.note = "perturb-and-MAP is approximate for multi-factor models; "
             "no bias correction applied";
  return out;
}

}  // namespace qcgm
