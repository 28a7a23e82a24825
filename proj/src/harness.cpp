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

#include "qcgm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>

#include "qcgm/brute_force.hpp"
#include "qcgm/metrics.hpp"
#include "qcgm/model_io.hpp"
#include "qcgm/structures.hpp"
#include "qcgm/version.hpp"

namespace qcgm {

namespace {

namespace fs = std::filesystem;

void write_text(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open \"" + path + "\" for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing \"" + path + "\"");
  }
}

std::string ensure_dir(const std::string &dir) {
  fs::create_directories(dir);
  return dir;
}

nlohmann::json meta_block() {
  return {{"created", timestamp_utc()},
          {"library_version", std::string(kVersion)}};
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("median of an empty set");
  }
  std::sort(values.begin(), values.end());
  const std::size_t h = values.size() / 2;
  if (values.size() % 2 == 1) return values[h];
  return 0.5 * (values[h - 1] + values[h]);
}

}  // namespace

NoiseConfig NoiseSpec::expand(std::uint32_t m) const {
  NoiseConfig cfg;
  cfg.depolarizing = depolarizing;
  if (readout > 0.0) cfg.readout_flip.assign(m, readout);
  cfg.validate(m);
  return cfg;
}

nlohmann::json NoiseSpec::to_json() const {
  return {{"depolarizing", depolarizing}, {"readout", readout}};
}

void check_method(const std::string &method) {
  if (method != "qcgm" && method != "gibbs" && method != "pam" &&
      method != "exact") {
    throw std::invalid_argument("unknown method \"" + method +
                                "\"; expected qcgm, gibbs, pam or exact");
  }
}

std::string bitstring(std::uint32_t x, std::uint32_t n) {
  std::string out(n, '0');
  for (std::uint32_t v = 0; v < n; ++v) {
    out[v] = static_cast<char>('0' + bit_at(x, v, n));
  }
  return out;
}

void write_samples_csv(const std::string &path,
                       const std::vector<std::uint32_t> &samples,
                       std::uint32_t n) {
  std::string body = "bitstring\n";
  for (std::uint32_t s : samples) {
    body += bitstring(s, n);
    body += '\n';
  }
  write_text(path, body);
}

Dataset read_samples_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open \"" + path + "\"");
  }
  Dataset data;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line == "bitstring") continue;
    if (data.n == 0) {
      if (line.size() >= 32) {
        throw std::runtime_error("\"" + path + "\": bitstrings too wide");
      }
      data.n = static_cast<std::uint32_t>(line.size());
    } else if (line.size() != data.n) {
      throw std::runtime_error("\"" + path + "\": ragged bitstring widths");
    }
    std::uint32_t x = 0;
    for (char ch : line) {
      if (ch != '0' && ch != '1') {
        throw std::runtime_error("\"" + path + "\": bitstrings must be 0/1");
      }
      x = (x << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    data.samples.push_back(x);
  }
  if (data.samples.empty()) {
    throw std::runtime_error("\"" + path + "\" contains no samples");
  }
  return data;
}

void write_trace_csv(const std::string &path, const TrainingTrace &trace) {
  std::string body = "iteration,nll,delta,grad_norm\n";
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const TraceRecord &rec = trace.records[i];
    body += std::to_string(i);
    body += ',';
    body += format_full(rec.nll);
    body += ',';
    body += format_full(rec.delta);
    body += ',';
    body += format_full(rec.grad_norm);
    body += '\n';
  }
  write_text(path, body);
}

std::vector<std::uint32_t> draw_from_pmf(const DenseDistribution &pmf,
                                         std::uint64_t count,
                                         std::uint64_t seed) {
  if (pmf.p.empty()) {
    throw std::invalid_argument("draw_from_pmf: empty table");
  }
  std::vector<double> cdf(pmf.p.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < pmf.p.size(); ++j) {
    acc += pmf.p[j];
    cdf[j] = acc;
  }
  PhiloxStream rng(seed, 0);
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double u = rng.next_double() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    out.push_back(static_cast<std::uint32_t>(
        it == cdf.end() ? cdf.size() - 1 : it - cdf.begin()));
  }
  return out;
}

std::string timestamp_utc() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return PhiloxStream(seed, tag).next_u64();
}

SampleRunResult run_sample(const GraphicalModel &model,
                           const std::string &method,
                           const SampleOptions &options,
                           const std::string &out_dir) {
  check_method(method);
  if (options.noise.any() && method != "qcgm") {
    throw std::invalid_argument("the noise model applies to the circuit "
                                "sampler only");
  }
  const DenseDistribution exact = brute_force_pmf(model);
  double shift = 0.0;
  normalize_for_circuit(model, &shift);

  SamplerOutput output;
  bool analytic = false;
  if (method == "qcgm") {
    const std::uint32_t m =
        model.num_vertices() + 1 + static_cast<std::uint32_t>(model.num_cliques());
    output = qcgm_sample(model, options.shots, options.seed,
                         options.noise.expand(m));
  } else if (method == "gibbs") {
    GibbsConfig cfg;
    cfg.burn_in = options.burn_in;
    cfg.thinning = options.thinning;
    cfg.seed = options.seed;
    output = gibbs_sample(model, options.shots, cfg);
  } else if (method == "pam") {
    SumOfGammaConfig cfg;
    cfg.k = options.sog_k != 0
                ? options.sog_k
                : static_cast<std::uint32_t>(model.num_cliques());
    cfg.s = options.sog_s;
    cfg.tau = options.sog_tau;
    cfg.seed = options.seed;
    output = pam_sample(model, options.shots, cfg, options.pam_kind);
  } else {
    analytic = true;
    output.note = "analytic reference distribution; nothing sampled";
  }

  nlohmann::json report;
  report["meta"] = meta_block();
  report["command"] = "sample";
  report["method"] = method;
  report["model"] = model_to_json(model);
  report["model_hash"] = model_hash(model);
  report["seed"] = options.seed;
  report["shots"] = options.shots;
  report["analytic"] = analytic;
  report["trials"] = output.trials;
  report["accepted"] = output.accepted;
  report["acceptance"] = output.acceptance;
  report["normalization_shift"] = shift;
  report["noise"] = options.noise.to_json();
  report["note"] = output.note;
  if (analytic) {
    report["metrics"] = {{"fidelity", 1.0},
                         {"hellinger", 0.0},
                         {"total_variation", 0.0}};
  } else if (output.samples.empty()) {
    report["metrics"] = nullptr;
    report["note"] = "no accepted samples; increase shots";
  } else {
    const DenseDistribution empirical =
        empirical_distribution(output.samples, model.num_vertices());
    report["metrics"] = {
        {"fidelity", fidelity(exact, empirical)},
        {"hellinger", hellinger(exact, empirical)},
        {"total_variation", total_variation(exact, empirical)}};
  }

  SampleRunResult result;
  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    if (analytic) {
      std::string body = "bitstring,probability\n";
      for (std::uint32_t x = 0; x < exact.p.size(); ++x) {
        body += bitstring(x, exact.n);
        body += ',';
        body += format_full(exact.p[x]);
        body += '\n';
      }
      result.samples_path = (fs::path(out_dir) / "probabilities.csv").string();
      write_text(result.samples_path, body);
    } else {
      result.samples_path = (fs::path(out_dir) / "samples.csv").string();
      write_samples_csv(result.samples_path, output.samples,
                        model.num_vertices());
    }
    report["files"] = {{"samples", fs::path(result.samples_path)
                                       .filename()
                                       .string()}};
    result.report_path = (fs::path(out_dir) / "report.json").string();
    write_text(result.report_path, report.dump(2) + "\n");
  }
  result.report = std::move(report);
  return result;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json &doc) {
  ExperimentConfig cfg;
  if (doc.contains("structures")) {
    cfg.structures = doc.at("structures").get<std::vector<std::string>>();
  }
  if (doc.contains("samplers")) {
    cfg.samplers = doc.at("samplers").get<std::vector<std::string>>();
  }
  cfg.runs = doc.value("runs", cfg.runs);
  cfg.shots = doc.value("shots", cfg.shots);
  if (doc.contains("theta_range")) {
    const auto range = doc.at("theta_range").get<std::vector<double>>();
    if (range.size() != 2) {
      throw std::invalid_argument("theta_range must be [lo, hi]");
    }
    cfg.theta_lo = range[0];
    cfg.theta_hi = range[1];
  }
  cfg.seed = doc.value("seed", cfg.seed);
  if (doc.contains("noise")) {
    cfg.noise.depolarizing = doc.at("noise").value("depolarizing", 0.0);
    cfg.noise.readout = doc.at("noise").value("readout", 0.0);
  }
  cfg.out_dir = doc.value("out_dir", cfg.out_dir);
  return cfg;
}

nlohmann::json ExperimentConfig::to_json() const {
  return {{"structures", structures},
          {"samplers", samplers},
          {"runs", runs},
          {"shots", shots},
          {"theta_range", {theta_lo, theta_hi}},
          {"seed", seed},
          {"noise", noise.to_json()},
          {"out_dir", out_dir}};
}

namespace {

/** Runs tasks on at most hardware_concurrency threads at a time. */
void run_in_waves(std::vector<std::function<void()>> &tasks) {
  const std::size_t width =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < tasks.size(); start += width) {
    const std::size_t stop = std::min(tasks.size(), start + width);
    std::vector<std::future<void>> wave;
    wave.reserve(stop - start);
    for (std::size_t i = start; i < stop; ++i) {
      wave.push_back(std::async(std::launch::async, tasks[i]));
    }
    for (auto &f : wave) f.get();
  }
}

}  // namespace

double ExperimentSummary::median_fidelity(const std::string &structure,
                                          const std::string &sampler) const {
  std::vector<double> values;
  for (const RunResult &run : runs) {
    if (run.structure == structure && run.sampler == sampler) {
      values.push_back(run.fidelity);
    }
  }
  return median(std::move(values));
}

double ExperimentSummary::median_acceptance(const std::string &structure,
                                            const std::string &sampler) const {
  std::vector<double> values;
  for (const RunResult &run : runs) {
    if (run.structure == structure && run.sampler == sampler) {
      values.push_back(run.acceptance);
    }
  }
  return median(std::move(values));
}

nlohmann::json ExperimentSummary::to_json() const {
  nlohmann::json runs_json = nlohmann::json::array();
  for (const RunResult &run : runs) {
    runs_json.push_back({{"structure", run.structure},
                         {"sampler", run.sampler},
                         {"run_index", run.run_index},
                         {"model_seed", run.model_seed},
                         {"sampler_seed", run.sampler_seed},
                         {"fidelity", run.fidelity},
                         {"hellinger", run.hellinger},
                         {"total_variation", run.total_variation},
                         {"trials", run.trials},
                         {"accepted", run.accepted},
                         {"acceptance", run.acceptance},
                         {"model_hash", run.model_hash},
                         {"report", run.report_path}});
  }
  nlohmann::json medians;
  nlohmann::json acceptances;
  for (const RunResult &run : runs) {
    medians[run.structure][run.sampler] =
        median_fidelity(run.structure, run.sampler);
    acceptances[run.structure][run.sampler] =
        median_acceptance(run.structure, run.sampler);
  }
  return {{"meta", meta_block()},
          {"config", config.to_json()},
          {"runs", runs_json},
          {"median_fidelity", medians},
          {"median_acceptance", acceptances}};
}

ExperimentSummary run_experiment(const ExperimentConfig &config) {
  ExperimentConfig cfg = config;
  if (cfg.structures.empty()) {
    for (const StructureSpec &spec : structure_suite()) {
      cfg.structures.push_back(spec.name);
    }
  }
  if (cfg.samplers.empty() || cfg.runs == 0 || cfg.shots == 0) {
    throw std::invalid_argument("experiment needs samplers, runs and shots");
  }
  for (const std::string &sampler : cfg.samplers) {
    check_method(sampler);
    if (sampler == "exact") {
      throw std::invalid_argument("the analytic method is not a sampler; "
                                  "grid cells must be qcgm, gibbs or pam");
    }
  }
  if (cfg.out_dir.empty()) {
    throw std::invalid_argument("experiment needs an output directory");
  }
  if (cfg.structures.size() > 255 || cfg.samplers.size() > 255 ||
      cfg.runs > 255) {
    throw std::invalid_argument("grid axis too long for seed derivation");
  }

  ExperimentSummary summary;
  summary.config = cfg;
  summary.runs.resize(cfg.structures.size() * cfg.samplers.size() * cfg.runs);

  std::vector<std::function<void()>> tasks;
  std::size_t slot = 0;
  for (std::size_t si = 0; si < cfg.structures.size(); ++si) {
    const StructureSpec &spec = find_structure(cfg.structures[si]);
    for (std::uint32_t r = 0; r < cfg.runs; ++r) {
      // The model depends on (structure, run) only, so every sampler
      // in a cell row sees the same instance.
      const std::uint64_t model_seed =
          derive_seed(cfg.seed, (1ull << 24) | (si << 16) | r);
      for (std::size_t mi = 0; mi < cfg.samplers.size(); ++mi) {
        const std::uint64_t sampler_seed = derive_seed(
            cfg.seed, (2ull << 24) | (si << 16) | (mi << 8) | r);
        RunResult *dest = &summary.runs[slot++];
        const std::string sampler = cfg.samplers[mi];
        const std::string dir =
            (fs::path(cfg.out_dir) / spec.name / sampler /
             ("run-" + std::to_string(r)))
                .string();
        tasks.push_back([=, &cfg]() {
          const GraphicalModel model =
              random_model(spec, model_seed, cfg.theta_lo, cfg.theta_hi);
          SampleOptions options;
          options.shots = cfg.shots;
          options.seed = sampler_seed;
          options.noise = cfg.noise;
          const SampleRunResult run = run_sample(model, sampler, options, dir);
          dest->structure = spec.name;
          dest->sampler = sampler;
          dest->run_index = r;
          dest->model_seed = model_seed;
          dest->sampler_seed = sampler_seed;
          if (run.report.at("metrics").is_null()) {
            throw std::runtime_error("experiment cell " + dir +
                                     " produced no accepted samples");
          }
          dest->fidelity = run.report.at("metrics").at("fidelity");
          dest->hellinger = run.report.at("metrics").at("hellinger");
          dest->total_variation = run.report.at("metrics").at("total_variation");
          dest->trials = run.report.at("trials");
          dest->accepted = run.report.at("accepted");
          dest->acceptance = run.report.at("acceptance");
          dest->model_hash = run.report.at("model_hash");
          dest->report_path = run.report_path;
        });
      }
    }
  }
  run_in_waves(tasks);

  ensure_dir(cfg.out_dir);
  write_text((fs::path(cfg.out_dir) / "summary.json").string(),
             summary.to_json().dump(2) + "\n");
  // One aggregated table row per grid cell, in configuration order.
  std::string table = "structure,sampler,median_fidelity,median_acceptance\n";
  for (const std::string &structure : cfg.structures) {
    for (const std::string &sampler : cfg.samplers) {
      table += structure + ',' + sampler + ',' +
               format_full(summary.median_fidelity(structure, sampler)) + ',' +
               format_full(summary.median_acceptance(structure, sampler)) +
               '\n';
    }
  }
  write_text((fs::path(cfg.out_dir) / "summary.csv").string(), table);
  return summary;
}

LearnRunResult run_learn(const GraphicalModel &init, const Dataset &data,
                         const AdamConfig &adam, const std::string &out_dir) {
  auto [learned, trace] = learn_mle(init, data, adam);

  nlohmann::json report;
  report["meta"] = meta_block();
  report["command"] = "learn";
  report["model_hash"] = model_hash(learned);
  report["iterations"] = adam.iterations;
  report["grad_samples"] = adam.grad_samples;
  report["seed"] = adam.seed;
  switch (adam.source) {
    case GradientSource::ExactOracle: report["grad_source"] = "exact"; break;
    case GradientSource::QcgmSimulated: report["grad_source"] = "qcgm"; break;
    case GradientSource::Gibbs: report["grad_source"] = "gibbs"; break;
  }
  report["initial_nll"] = trace.records.front().nll;
  report["final_nll"] = trace.records.back().nll;
  report["initial_delta"] = trace.records.front().delta;
  report["final_delta"] = trace.records.back().delta;
  report["final_grad_norm"] = trace.records.back().grad_norm;
  report["warnings"] = trace.warnings;

  LearnRunResult result{std::move(learned), std::move(trace), report, "", "",
                        ""};
  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    result.trace_path = (fs::path(out_dir) / "trace.csv").string();
    write_trace_csv(result.trace_path, result.trace);
    result.model_path = (fs::path(out_dir) / "learned_model.json").string();
    save_model(result.learned, result.model_path);
    report["files"] = {{"trace", "trace.csv"},
                       {"learned_model", "learned_model.json"}};
    result.report_path = (fs::path(out_dir) / "report.json").string();
    write_text(result.report_path, report.dump(2) + "\n");
    result.report = std::move(report);
  }
  return result;
}

}  // namespace qcgm
