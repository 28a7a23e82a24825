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
 * @file harness.hpp
 * Reproducible end-to-end runs: sample a model with a chosen method,
 * score the result against the exact distribution, train from data,
 * and sweep whole benchmark grids. Every artifact lands on disk as
 * JSON or CSV (schemas in docs/formats.md) and every byte except the
 * "meta" block is a pure function of the configuration.
 *
 * Grid runs are independent of each other and execute on a small
 * thread pool; per-run seeds are derived from the grid seed and the
 * run coordinates, never from scheduling order.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcgm/graphical_model.hpp"
#include "qcgm/inference.hpp"
#include "qcgm/samplers.hpp"

namespace qcgm {

/** Scalar noise knobs as exposed on the command line. */
struct NoiseSpec {
  double depolarizing = 0.0;
  double readout = 0.0;

  bool any() const { return depolarizing > 0.0 || readout > 0.0; }
  /** Expands to per-qubit form for a register of @p m qubits. */
  NoiseConfig expand(std::uint32_t m) const;
  nlohmann::json to_json() const;
};

/** "qcgm", "gibbs", "pam" or "exact". @throws std::invalid_argument. */
void check_method(const std::string &method);

struct SampleOptions {
  std::uint64_t shots = 20000;
  std::uint64_t seed = 0;
  NoiseSpec noise;
  // Gibbs knobs.
  std::uint64_t burn_in = 100;
  std::uint64_t thinning = 100;
  // Perturb-and-MAP knobs; sog_k == 0 means one share per clique.
  std::uint32_t sog_k = 0;
  std::uint32_t sog_s = 10;
  double sog_tau = 1.0;
  PerturbationKind pam_kind = PerturbationKind::SumOfGamma;
};

struct SampleRunResult {
  nlohmann::json report;
  /** Empty when nothing was written (no out_dir requested). */
  std::string report_path;
  std::string samples_path;
};

/**
 * Runs one sampling method on @p model, scores it against the exact
 * distribution and, when @p out_dir is non-empty, writes report.json
 * plus samples.csv (probabilities.csv for the analytic method) there.
 */
SampleRunResult run_sample(const GraphicalModel &model,
                           const std::string &method,
                           const SampleOptions &options,
                           const std::string &out_dir);

struct ExperimentConfig {
  std::vector<std::string> structures;  ///< empty = whole catalogue
  std::vector<std::string> samplers = {"qcgm", "gibbs", "pam"};
  std::uint32_t runs = 5;
  std::uint64_t shots = 20000;
  double theta_lo = -2.0;
  double theta_hi = 0.0;
  std::uint64_t seed = 0;
  NoiseSpec noise;
  std::string out_dir;

  static ExperimentConfig from_json(const nlohmann::json &doc);
  nlohmann::json to_json() const;
};

struct RunResult {
  std::string structure;
  std::string sampler;
  std::uint32_t run_index = 0;
  std::uint64_t model_seed = 0;
  std::uint64_t sampler_seed = 0;
  double fidelity = 0.0;
  double hellinger = 0.0;
  double total_variation = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  double acceptance = 1.0;
  std::string model_hash;
  std::string report_path;
};

struct ExperimentSummary {
  ExperimentConfig config;
  std::vector<RunResult> runs;

  /** Median fidelity of one (structure, sampler) cell. */
  double median_fidelity(const std::string &structure,
                         const std::string &sampler) const;
  /** Median empirical acceptance of one (structure, sampler) cell. */
  double median_acceptance(const std::string &structure,
                           const std::string &sampler) const;
  nlohmann::json to_json() const;
};

/** Runs the whole grid and writes everything under config.out_dir. */
ExperimentSummary run_experiment(const ExperimentConfig &config);

struct LearnRunResult {
  GraphicalModel learned;
  TrainingTrace trace;
  nlohmann::json report;
  std::string report_path;
  std::string trace_path;
  std::string model_path;
};

/**
 * Trains from @p init on @p data and, when @p out_dir is non-empty,
 * writes report.json, trace.csv and learned_model.json.
 */
LearnRunResult run_learn(const GraphicalModel &init, const Dataset &data,
                         const AdamConfig &adam, const std::string &out_dir);

// Small shared helpers, exposed for the command line tool and tests.

/** "010...", vertex 0 first. */
std::string bitstring(std::uint32_t x, std::uint32_t n);

void write_samples_csv(const std::string &path,
                       const std::vector<std::uint32_t> &samples,
                       std::uint32_t n);

/** Reads a samples CSV back; width is inferred from the first row. */
Dataset read_samples_csv(const std::string &path);

void write_trace_csv(const std::string &path, const TrainingTrace &trace);

/** Exact draws from a dense table by CDF inversion; for building
 * synthetic training sets. */
std::vector<std::uint32_t> draw_from_pmf(const DenseDistribution &pmf,
                                         std::uint64_t count,
                                         std::uint64_t seed);

/** ISO 8601 UTC wall time; the only nondeterministic report content. */
std::string timestamp_utc();

/** Seed for a sub-task, derived so tasks stay order-independent. */
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

}  // namespace qcgm
