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

/**
 * Command line front end. Subcommands mirror the library surface:
 * gen-model, sample, learn, experiment, export-qasm, map, partition.
 * Results go to stdout as JSON; artifacts go to the directory named by
 * --out, falling back to $QCGM_OUT and then ./qcgm-out. Errors are a
 * single JSON object on stderr and a nonzero exit code.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <typeinfo>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcgm/brute_force.hpp"
#include "qcgm/harness.hpp"
#include "qcgm/inference.hpp"
#include "qcgm/model_io.hpp"
#include "qcgm/qasm.hpp"
#include "qcgm/structures.hpp"
#include "qcgm/version.hpp"

namespace {

using nlohmann::json;

std::string resolve_out_dir(const std::string &flag) {
  if (!flag.empty()) return flag;
  if (const char *env = std::getenv("QCGM_OUT"); env != nullptr && *env) {
    return env;
  }
  return "qcgm-out";
}

qcgm::GradientSource parse_grad_source(const std::string &name) {
  if (name == "exact") return qcgm::GradientSource::ExactOracle;
  if (name == "qcgm") return qcgm::GradientSource::QcgmSimulated;
  if (name == "gibbs") return qcgm::GradientSource::Gibbs;
  throw std::invalid_argument("unknown gradient source \"" + name +
                              "\"; expected exact, qcgm or gibbs");
}

qcgm::PerturbationKind parse_pam_noise(const std::string &name) {
  if (name == "sog") return qcgm::PerturbationKind::SumOfGamma;
  if (name == "gumbel") return qcgm::PerturbationKind::Gumbel;
  if (name == "none") return qcgm::PerturbationKind::None;
  throw std::invalid_argument("unknown perturbation \"" + name +
                              "\"; expected sog, gumbel or none");
}

struct GenModelArgs {
  std::string structure;
  bool list = false;
  std::uint64_t seed = 0;
  double theta_lo = -2.0;
  double theta_hi = 0.0;
  std::string out;
};

int run_gen_model(const GenModelArgs &args) {
  if (args.list) {
    json names = json::array();
    for (const auto &spec : qcgm::structure_suite()) names.push_back(spec.name);
    std::cout << names.dump(2) << "\n";
    return 0;
  }
  if (args.structure.empty()) {
    throw std::invalid_argument("gen-model needs --structure (or --list)");
  }
  const qcgm::GraphicalModel model =
      qcgm::random_model(qcgm::find_structure(args.structure), args.seed,
                         args.theta_lo, args.theta_hi);
  if (args.out.empty()) {
    std::cout << qcgm::model_to_json(model).dump(2) << "\n";
  } else {
    qcgm::save_model(model, args.out);
    std::cout << json{{"written", args.out},
                      {"model_hash", qcgm::model_hash(model)}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

struct SampleArgs {
  std::string model_path;
  std::string method = "qcgm";
  qcgm::SampleOptions options;
  std::string pam_noise = "sog";
  std::string out;
};

int run_sample_cmd(SampleArgs &args) {
  args.options.pam_kind = parse_pam_noise(args.pam_noise);
  const qcgm::GraphicalModel model = qcgm::load_model(args.model_path);
  for (const std::string &warning : model.structural_warnings()) {
    std::cerr << "warning: " << warning << "\n";
  }
  const qcgm::SampleRunResult result = qcgm::run_sample(
      model, args.method, args.options, resolve_out_dir(args.out));
  std::cout << result.report.dump(2) << "\n";
  return 0;
}

struct LearnArgs {
  std::string model_path;
  std::string structure;
  std::string data_path;
  std::uint64_t truth_seed = 1;
  std::uint64_t train_samples = 1000;
  std::string grad_source = "exact";
  qcgm::AdamConfig adam;
  std::string out;
};

int run_learn_cmd(LearnArgs &args) {
  args.adam.source = parse_grad_source(args.grad_source);
  if (args.model_path.empty() == args.structure.empty()) {
    throw std::invalid_argument(
        "learn needs exactly one of --model (initial point) or --structure "
        "(zero initialization)");
  }
  const qcgm::GraphicalModel init =
      args.model_path.empty()
          ? qcgm::GraphicalModel(qcgm::find_structure(args.structure).n,
                                 qcgm::find_structure(args.structure).cliques)
          : qcgm::load_model(args.model_path);

  qcgm::Dataset data;
  json data_origin;
  if (!args.data_path.empty()) {
    data = qcgm::read_samples_csv(args.data_path);
    data_origin = {{"file", args.data_path}};
  } else {
    // Synthetic ground truth over the same structure; training should
    // then drive the NLL toward that model's likelihood.
    const qcgm::GraphicalModel truth = qcgm::random_model(
        qcgm::StructureSpec{"init", init.num_vertices(), init.cliques()},
        args.truth_seed);
    data.n = truth.num_vertices();
    data.samples = qcgm::draw_from_pmf(qcgm::brute_force_pmf(truth),
                                       args.train_samples,
                                       qcgm::derive_seed(args.truth_seed, 0xDA7A));
    data_origin = {{"synthetic_truth_seed", args.truth_seed},
                   {"train_samples", args.train_samples},
                   {"truth_model_hash", qcgm::model_hash(truth)}};
  }

  qcgm::LearnRunResult result =
      qcgm::run_learn(init, data, args.adam, resolve_out_dir(args.out));
  result.report["data"] = data_origin;
  std::cout << result.report.dump(2) << "\n";
  return 0;
}

struct ExperimentArgs {
  std::string config_path;
  std::string out;
};

int run_experiment_cmd(const ExperimentArgs &args) {
  std::ifstream in(args.config_path);
  if (!in) {
    throw std::runtime_error("cannot open \"" + args.config_path + "\"");
  }
  json doc;
  in >> doc;
  qcgm::ExperimentConfig config = qcgm::ExperimentConfig::from_json(doc);
  if (!args.out.empty()) config.out_dir = args.out;
  if (config.out_dir.empty()) config.out_dir = resolve_out_dir("");
  const qcgm::ExperimentSummary summary = qcgm::run_experiment(config);
  std::cout << summary.to_json().dump(2) << "\n";
  return 0;
}

struct ModelOnlyArgs {
  std::string model_path;
  std::string out;
};

int run_export_qasm(const ModelOnlyArgs &args) {
  const qcgm::GraphicalModel model = qcgm::load_model(args.model_path);
  const std::string text = qcgm::export_qasm(qcgm::build_circuit(model));
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out);
    if (!out) {
      throw std::runtime_error("cannot open \"" + args.out + "\" for writing");
    }
    out << text;
    std::cout << json{{"written", args.out}}.dump(2) << "\n";
  }
  return 0;
}

int run_map(const ModelOnlyArgs &args) {
  const qcgm::GraphicalModel model = qcgm::load_model(args.model_path);
  const std::uint32_t state = qcgm::map_estimate(model);
  std::cout << json{{"state", state},
                    {"bitstring", qcgm::bitstring(state, model.num_vertices())},
                    {"log_potential", qcgm::log_potential(model, state)}}
                   .dump(2)
            << "\n";
  return 0;
}

struct PartitionArgs {
  std::string model_path;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  bool exact = false;
};

int run_partition(const PartitionArgs &args) {
  const qcgm::GraphicalModel model = qcgm::load_model(args.model_path);
  const qcgm::PartitionEstimate est =
      args.exact ? qcgm::estimate_partition_exact(model)
                 : qcgm::estimate_partition(model, args.shots, args.seed);
  std::cout << json{{"z", est.z},
                    {"half_width", est.half_width},
                    {"delta", est.delta},
                    {"trials", est.trials},
                    {"accepted", est.accepted},
                    {"normalization_shift", est.shift},
                    {"exact", est.exact}}
                   .dump(2)
            << "\n";
  return 0;
}

const char *error_kind(const std::exception &err) {
  if (dynamic_cast<const std::invalid_argument *>(&err)) {
    return "invalid_argument";
  }
  if (dynamic_cast<const std::domain_error *>(&err)) return "domain_error";
  if (dynamic_cast<const std::runtime_error *>(&err)) return "runtime_error";
  return "error";
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"compile discrete graphical models into sampling circuits"};
  app.set_version_flag("--version", std::string(qcgm::kVersion));
  app.require_subcommand(1);

  GenModelArgs gen_args;
  CLI::App *gen = app.add_subcommand(
      "gen-model", "generate a random model over a catalogue structure");
  gen->add_option("--structure", gen_args.structure, "structure name");
  gen->add_flag("--list", gen_args.list, "list known structures and exit");
  gen->add_option("--seed", gen_args.seed, "parameter seed");
  gen->add_option("--theta-lo", gen_args.theta_lo, "uniform range low end");
  gen->add_option("--theta-hi", gen_args.theta_hi, "uniform range high end");
  gen->add_option("--out", gen_args.out, "model file (stdout if omitted)");

  SampleArgs sample_args;
  CLI::App *sample = app.add_subcommand(
      "sample", "sample a model and score against the exact distribution");
  sample->add_option("--model", sample_args.model_path, "model JSON file")
      ->required();
  sample->add_option("--method", sample_args.method,
                     "qcgm | gibbs | pam | exact");
  sample->add_option("--shots", sample_args.options.shots,
                     "shots (qcgm) or emitted samples (gibbs, pam)");
  sample->add_option("--seed", sample_args.options.seed, "sampling seed");
  sample->add_option("--noise-depol", sample_args.options.noise.depolarizing,
                     "per-gate per-qubit depolarizing probability");
  sample->add_option("--noise-readout", sample_args.options.noise.readout,
                     "per-qubit readout flip probability");
  sample->add_option("--burn-in", sample_args.options.burn_in,
                     "gibbs burn-in sweeps");
  sample->add_option("--thinning", sample_args.options.thinning,
                     "gibbs sweeps between emissions");
  sample->add_option("--sog-k", sample_args.options.sog_k,
                     "perturbation shares (0 = one per clique)");
  sample->add_option("--sog-s", sample_args.options.sog_s,
                     "gamma summands per perturbation");
  sample->add_option("--sog-tau", sample_args.options.sog_tau,
                     "perturbation temperature");
  sample->add_option("--pam-noise", sample_args.pam_noise,
                     "sog | gumbel | none");
  sample->add_option("--out", sample_args.out, "output directory");

  LearnArgs learn_args;
  CLI::App *learn = app.add_subcommand(
      "learn", "fit parameters by maximum likelihood with ADAM");
  learn->add_option("--model", learn_args.model_path, "initial model file");
  learn->add_option("--structure", learn_args.structure,
                    "structure for a zero-initialized start");
  learn->add_option("--data", learn_args.data_path,
                    "training samples CSV (bitstring per line)");
  learn->add_option("--truth-seed", learn_args.truth_seed,
                    "seed of the synthetic ground-truth model");
  learn->add_option("--train-samples", learn_args.train_samples,
                    "synthetic training set size");
  learn->add_option("--iterations", learn_args.adam.iterations,
                    "optimizer iterations");
  learn->add_option("--alpha", learn_args.adam.alpha, "ADAM step size");
  learn->add_option("--grad-source", learn_args.grad_source,
                    "exact | qcgm | gibbs");
  learn->add_option("--grad-samples", learn_args.adam.grad_samples,
                    "sampling budget per gradient");
  learn->add_option("--seed", learn_args.adam.seed, "training seed");
  learn->add_option("--out", learn_args.out, "output directory");

  ExperimentArgs experiment_args;
  CLI::App *experiment = app.add_subcommand(
      "experiment", "run a sampling grid from a JSON configuration");
  experiment->add_option("--config", experiment_args.config_path,
                         "experiment configuration JSON")
      ->required();
  experiment->add_option("--out", experiment_args.out,
                         "override the configured output directory");

  ModelOnlyArgs qasm_args;
  CLI::App *export_qasm = app.add_subcommand(
      "export-qasm", "compile a model and print OpenQASM 3 text");
  export_qasm->add_option("--model", qasm_args.model_path, "model JSON file")
      ->required();
  export_qasm->add_option("--out", qasm_args.out,
                          "QASM file (stdout if omitted)");

  ModelOnlyArgs map_args;
  CLI::App *map_cmd =
      app.add_subcommand("map", "most probable configuration of a model");
  map_cmd->add_option("--model", map_args.model_path, "model JSON file")
      ->required();

  PartitionArgs partition_args;
  CLI::App *partition = app.add_subcommand(
      "partition", "estimate the partition function from acceptance rates");
  partition->add_option("--model", partition_args.model_path,
                        "model JSON file")
      ->required();
  partition->add_option("--shots", partition_args.shots, "sampling shots");
  partition->add_option("--seed", partition_args.seed, "sampling seed");
  partition->add_flag("--exact", partition_args.exact,
                      "use the exact acceptance probability");

  try {
    app.parse(argc, argv);
    if (*gen) return run_gen_model(gen_args);
    if (*sample) return run_sample_cmd(sample_args);
    if (*learn) return run_learn_cmd(learn_args);
    if (*experiment) return run_experiment_cmd(experiment_args);
    if (*export_qasm) return run_export_qasm(qasm_args);
    if (*map_cmd) return run_map(map_args);
    if (*partition) return run_partition(partition_args);
    return 0;
  } catch (const CLI::ParseError &err) {
    return app.exit(err);
  } catch (const std::exception &err) {
    std::cerr << json{{"error",
                       {{"type", error_kind(err)}, {"message", err.what()}}}}
                     .dump()
              << "\n";
    return 1;
  }
}
