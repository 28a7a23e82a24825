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

#include "qcgm/inference.hpp"

#include <cmath>
#include <stdexcept>

#include "qcgm/pauli_stats.hpp"

namespace qcgm {

namespace {

/** Derives an independent seed for a sub-task of a seeded run. */
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return PhiloxStream(seed, tag).next_u64();
}

std::vector<double> sample_moments(const GraphicalModel &model,
                                   const std::vector<std::uint32_t> &samples) {
  std::vector<double> mu(model.num_params(), 0.0);
  for (std::uint32_t x : samples) {
    for (std::size_t c = 0; c < model.num_cliques(); ++c) {
      mu[model.param_offset(c) + model.clique_config(c, x)] += 1.0;
    }
  }
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (double &v : mu) v *= inv;
  return mu;
}

}  // namespace

GradientResult gradient(const GraphicalModel &model, const Dataset &data,
                        GradientSource source, std::uint64_t sample_budget,
                        std::uint64_t seed, const NoiseConfig &noise) {
  const std::vector<double> data_mu = empirical_moments(model, data);
  GradientResult out;
  std::vector<double> model_mu;
  switch (source) {
    case GradientSource::ExactOracle:
      model_mu = moments(model);
      break;
    case GradientSource::QcgmSimulated: {
      const SamplerOutput shots = qcgm_sample(model, sample_budget, seed, noise);
      out.trials = shots.trials;
      out.accepted = shots.accepted;
      if (shots.samples.empty()) {
        out.empty_batch = true;
        out.gradient.assign(model.num_params(), 0.0);
        return out;
      }
      model_mu = sample_moments(model, shots.samples);
      break;
    }
    case GradientSource::Gibbs: {
      GibbsConfig cfg;
      cfg.seed = seed;
      // Gradient batches favour throughput over low autocorrelation.
      cfg.thinning = 1;
      const SamplerOutput chain = gibbs_sample(model, sample_budget, cfg);
      out.trials = chain.trials;
      out.accepted = chain.accepted;
      model_mu = sample_moments(model, chain.samples);
      break;
    }
  }
  out.gradient.resize(model.num_params());
  for (std::size_t j = 0; j < model_mu.size(); ++j) {
    out.gradient[j] = model_mu[j] - data_mu[j];
  }
  return out;
}

namespace {

double l2_norm(const std::vector<double> &v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double trace_delta(const GraphicalModel &model, GradientSource source,
                   const GradientResult &grad) {
  if (source == GradientSource::QcgmSimulated) {
    if (grad.trials == 0) return 0.0;
    return static_cast<double>(grad.accepted) /
           static_cast<double>(grad.trials);
  }
  return exact_conditional(build_circuit(model)).success_prob;
}

}  // namespace

std::pair<GraphicalModel, TrainingTrace> learn_mle(const GraphicalModel &init,
                                                   const Dataset &data,
                                                   const AdamConfig &cfg) {
  if (!(cfg.alpha > 0.0) || !(cfg.beta1 >= 0.0 && cfg.beta1 < 1.0) ||
      !(cfg.beta2 >= 0.0 && cfg.beta2 < 1.0) || !(cfg.epsilon > 0.0)) {
    throw std::invalid_argument("learn_mle: malformed optimizer constants");
  }
  const std::size_t d = init.num_params();
  std::vector<double> theta = init.theta();
  std::vector<double> m(d, 0.0), v(d, 0.0);
  std::vector<double> last_grad;

  TrainingTrace trace;
  trace.records.reserve(cfg.iterations + 1);
  GraphicalModel current = init;

  for (std::uint32_t t = 0; t <= cfg.iterations; ++t) {
    GradientResult g = gradient(current, data, cfg.source, cfg.grad_samples,
                                derive_seed(cfg.seed, t), cfg.noise);
    if (g.empty_batch) {
      if (last_grad.empty()) {
        trace.warnings.push_back(
            "iteration " + std::to_string(t) +
            ": no accepted samples and no previous gradient; skipping update");
      } else {
        trace.warnings.push_back("iteration " + std::to_string(t) +
                                 ": no accepted samples, reusing the "
                                 "previous gradient");
        g.gradient = last_grad;
      }
    } else {
      last_grad = g.gradient;
    }

    TraceRecord rec;
    rec.theta = theta;
    rec.nll = nll(current, data);
    rec.delta = trace_delta(current, cfg.source, g);
    rec.grad_norm = l2_norm(g.gradient);
    trace.records.push_back(std::move(rec));

    if (t == cfg.iterations) break;

    const double bc1 = 1.0 - std::pow(cfg.beta1, t + 1);
    const double bc2 = 1.0 - std::pow(cfg.beta2, t + 1);
    for (std::size_t j = 0; j < d; ++j) {
      m[j] = cfg.beta1 * m[j] + (1.0 - cfg.beta1) * g.gradient[j];
      v[j] = cfg.beta2 * v[j] + (1.0 - cfg.beta2) * g.gradient[j] * g.gradient[j];
      theta[j] -= cfg.alpha * (m[j] / bc1) / (std::sqrt(v[j] / bc2) + cfg.epsilon);
    }
    current = init.with_theta(theta);
  }
  return {std::move(current), std::move(trace)};
}

std::vector<double> gamma_parametrization(const GraphicalModel &model) {
  std::vector<double> gamma(model.num_params());
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    gamma[j] = theta_to_gamma(model.theta()[j]);
  }
  return gamma;
}

std::vector<double> gamma_to_theta_vector(const std::vector<double> &gamma) {
  std::vector<double> theta(gamma.size());
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    theta[j] = gamma_to_theta(gamma[j]);
  }
  return theta;
}

double dtheta_dgamma(double gamma) { return -4.0 * std::tan(2.0 * gamma); }

std::uint32_t map_estimate(const GraphicalModel &model, std::uint32_t max_n) {
  if (model.num_vertices() > max_n) {
    throw std::runtime_error("map_estimate: vertex count exceeds limit " +
                             std::to_string(max_n));
  }
  const Hamiltonian h = build_hamiltonian(model);
  const std::uint64_t states = std::uint64_t{1} << model.num_vertices();
  std::uint32_t best = 0;
  double best_energy = hamiltonian_diag_entry(h, 0);
  for (std::uint64_t x = 1; x < states; ++x) {
    const double e = hamiltonian_diag_entry(h, static_cast<std::uint32_t>(x));
    if (e < best_energy) {
      best_energy = e;
      best = static_cast<std::uint32_t>(x);
    }
  }
  return best;
}

namespace {

PartitionEstimate rescale_partition(const GraphicalModel &model, double delta,
                                    double delta_stderr, double shift) {
  const double scale =
      std::pow(2.0, static_cast<double>(model.num_vertices())) *
      std::exp(shift * static_cast<double>(model.num_cliques()));
  PartitionEstimate out;
  out.z = delta * scale;
  out.half_width = 1.96 * delta_stderr * scale;
  out.delta = delta;
  out.shift = shift;
  return out;
}

}  // namespace

PartitionEstimate estimate_partition(const GraphicalModel &model,
                                     std::uint64_t shots, std::uint64_t seed,
                                     std::uint32_t limit) {
  if (shots == 0) {
    throw std::invalid_argument("estimate_partition: need at least one shot");
  }
  const CircuitIR circuit = build_circuit(model);
  const std::vector<ShotRecord> records =
      sample_shots(circuit, shots, seed, NoiseConfig{}, limit);
  std::uint64_t accepted = 0;
  for (const ShotRecord &rec : records) accepted += rec.accepted ? 1 : 0;
  const double delta =
      static_cast<double>(accepted) / static_cast<double>(shots);
  const double stderr_delta =
      std::sqrt(delta * (1.0 - delta) / static_cast<double>(shots));
  PartitionEstimate out = rescale_partition(model, delta, stderr_delta,
                                            circuit.provenance.shift);
  out.trials = shots;
  out.accepted = accepted;
  return out;
}

PartitionEstimate estimate_partition_exact(const GraphicalModel &model,
                                           std::uint32_t limit) {
  const CircuitIR circuit = build_circuit(model);
  const ExactConditional cond = exact_conditional(circuit, limit);
  PartitionEstimate out = rescale_partition(model, cond.success_prob, 0.0,
                                            circuit.provenance.shift);
  out.exact = true;
  return out;
}

}  // namespace qcgm
