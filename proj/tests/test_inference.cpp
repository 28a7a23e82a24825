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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "qcgm/circuit.hpp"
#include "qcgm/inference.hpp"

using namespace qcgm;

TEST_CASE("exact gradient is the moment gap") {
  const auto model = testing::example_chain3();
  const auto data = testing::example_chain3_dataset();
  const auto result = gradient(model, data, GradientSource::ExactOracle, 0, 0);
  REQUIRE(result.gradient.size() == model.num_params());
  CHECK_FALSE(result.empty_batch);

  const auto mom = moments(model);
  const auto emp = empirical_moments(model, data);
  for (std::size_t i = 0; i < mom.size(); ++i) {
    CHECK(result.gradient[i] ==
          doctest::Approx(mom[i] - emp[i]).epsilon(1e-13));
  }
}

TEST_CASE("exact gradient matches finite differences of the NLL") {
  const auto model = testing::example_chain3();
  const auto data = testing::example_chain3_dataset();
  const auto result = gradient(model, data, GradientSource::ExactOracle, 0, 0);
  const double h = 1e-6;
  for (std::size_t i = 0; i < model.num_params(); ++i) {
    auto up = model.theta();
    auto down = model.theta();
    up[i] += h;
    down[i] -= h;
    const double fd = (nll(model.with_theta(up), data) -
                       nll(model.with_theta(down), data)) /
                      (2 * h);
    CHECK(result.gradient[i] == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("sampled gradients approach the exact gradient") {
  const auto model = testing::example_chain3();
  const auto data = testing::example_chain3_dataset();
  const auto exact =
      gradient(model, data, GradientSource::ExactOracle, 0, 0);

  const auto qcgm_grad =
      gradient(model, data, GradientSource::QcgmSimulated, 200000, 5);
  CHECK(qcgm_grad.trials == 200000);
  CHECK(qcgm_grad.accepted > 0);
  for (std::size_t i = 0; i < exact.gradient.size(); ++i) {
    CHECK(std::abs(qcgm_grad.gradient[i] - exact.gradient[i]) < 0.02);
  }

  const auto gibbs_grad =
      gradient(model, data, GradientSource::Gibbs, 50000, 5);
  CHECK(gibbs_grad.accepted == 50000);
  for (std::size_t i = 0; i < exact.gradient.size(); ++i) {
    CHECK(std::abs(gibbs_grad.gradient[i] - exact.gradient[i]) < 0.02);
  }
}

TEST_CASE("training reduces the negative log-likelihood") {
  const auto data = testing::example_chain3_dataset();
  GraphicalModel init(3, {{0, 1}, {1, 2}});
  AdamConfig cfg;
  cfg.iterations = 30;
  const auto [learned, trace] = learn_mle(init, data, cfg);

  REQUIRE(trace.records.size() == 31);
  CHECK(trace.warnings.empty());
  CHECK(trace.records.back().nll < trace.records.front().nll);
  CHECK(nll(learned, data) == doctest::Approx(trace.records.back().nll));
  // Iterate 0 is the untouched initial model.
  CHECK(trace.records[0].theta == init.theta());
  CHECK(trace.records[0].nll == doctest::Approx(nll(init, data)));
  for (const auto &rec : trace.records) {
    CHECK(rec.delta > 0.0);
    CHECK(rec.delta <= 1.0);
    CHECK(std::isfinite(rec.grad_norm));
  }
}

TEST_CASE("long exact-gradient training reaches the true optimum") {
  // The maximum-likelihood moments condition E_theta[phi] = empirical
  // moments is checked directly at the learned parameters.
  const auto data = testing::example_chain3_dataset();
  GraphicalModel init(3, {{0, 1}, {1, 2}});
  AdamConfig cfg;
  cfg.iterations = 400;
  cfg.alpha = 0.05;
  const auto [learned, trace] = learn_mle(init, data, cfg);
  const auto mom = moments(learned);
  const auto emp = empirical_moments(learned, data);
  for (std::size_t i = 0; i < mom.size(); ++i) {
    CHECK(std::abs(mom[i] - emp[i]) < 5e-3);
  }
}

TEST_CASE("training with sampled gradients is deterministic") {
  const auto data = testing::example_chain3_dataset();
  GraphicalModel init(3, {{0, 1}, {1, 2}});
  AdamConfig cfg;
  cfg.iterations = 5;
  cfg.grad_samples = 2000;
  cfg.source = GradientSource::QcgmSimulated;
  cfg.seed = 99;
  const auto [a, ta] = learn_mle(init, data, cfg);
  const auto [b, tb] = learn_mle(init, data, cfg);
  CHECK(a.theta() == b.theta());
  REQUIRE(ta.records.size() == tb.records.size());
  for (std::size_t i = 0; i < ta.records.size(); ++i) {
    CHECK(ta.records[i].nll == tb.records[i].nll);
    CHECK(ta.records[i].delta == tb.records[i].delta);
  }
}

TEST_CASE("zero iterations return the initial model untouched") {
  const auto data = testing::example_chain3_dataset();
  const auto init = testing::example_chain3();
  AdamConfig cfg;
  cfg.iterations = 0;
  const auto [learned, trace] = learn_mle(init, data, cfg);
  CHECK(learned.theta() == init.theta());
  REQUIRE(trace.records.size() == 1);
  CHECK(trace.records[0].nll == doctest::Approx(nll(init, data)));
}

TEST_CASE("angle parametrization round-trips") {
  const auto model = testing::example_chain3();
  const auto gammas = gamma_parametrization(model);
  REQUIRE(gammas.size() == model.num_params());
  const auto back = gamma_to_theta_vector(gammas);
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i] == doctest::Approx(model.theta()[i]).epsilon(1e-12));
  }
  // Positive parameters have no angle.
  CHECK_THROWS_AS(gamma_parametrization(testing::example_mixed()),
                  std::domain_error);
}

TEST_CASE("angle derivative matches finite differences") {
  const double h = 1e-7;
  for (double gamma : {0.05, 0.2, 0.4, 0.7}) {
    const double fd =
        (gamma_to_theta(gamma + h) - gamma_to_theta(gamma - h)) / (2 * h);
    CHECK(dtheta_dgamma(gamma) == doctest::Approx(fd).epsilon(1e-5));
    CHECK(dtheta_dgamma(gamma) ==
          doctest::Approx(-4.0 * std::tan(2.0 * gamma)).epsilon(1e-13));
  }
}

TEST_CASE("energy-based MAP agrees with exhaustive search") {
  CHECK(map_estimate(testing::example_single_vertex()) == 0);
  CHECK(map_estimate(testing::example_chain3()) == 5);
  CHECK(map_estimate(testing::example_triangle()) == 3);
  CHECK(map_estimate(testing::example_mixed()) == 11);
  for (const auto &model : testing::random_suite_models(20, 77, -4.0, 1.5)) {
    CHECK(map_estimate(model) == map_state_brute(model));
  }
}

TEST_CASE("exact partition estimates match enumeration") {
  struct Case {
    GraphicalModel model;
    double z;
  };
  const Case cases[] = {
      {testing::example_single_vertex(), 1.3678794411714423},
      {testing::example_chain3(), 2.6945187941418105},
      {testing::example_triangle(), 4.331596566551769},
      {testing::example_mixed(), 18.15128027899831},
  };
  for (const auto &[model, z] : cases) {
    const auto est = estimate_partition_exact(model);
    CHECK(est.exact);
    CHECK(est.half_width == 0.0);
    CHECK(est.z == doctest::Approx(z).epsilon(1e-12));
  }
  // The mixed model exercises the shift restoration path.
  const auto est = estimate_partition_exact(testing::example_mixed());
  CHECK(est.shift == doctest::Approx(0.8));
  CHECK(est.delta == doctest::Approx(0.22904251784217597).epsilon(1e-10));
}

TEST_CASE("sampled partition estimates carry a calibrated interval") {
  const auto model = testing::example_chain3();
  const double z_true = 2.6945187941418105;
  const auto est = estimate_partition(model, 50000, 31);
  CHECK_FALSE(est.exact);
  CHECK(est.trials == 50000);
  CHECK(est.half_width > 0.0);
  CHECK(std::abs(est.z - z_true) < 2.0 * est.half_width);
  // The interval is the binomial normal approximation scaled like z.
  const double rate = static_cast<double>(est.accepted) / est.trials;
  const double want_hw =
      1.96 * std::sqrt(rate * (1 - rate) / est.trials) * 8.0;
  CHECK(est.half_width == doctest::Approx(want_hw).epsilon(1e-12));
}

TEST_CASE("empty sampling batches reuse the previous gradient") {
  // One shot per iteration against a 25% acceptance rate produces
  // empty batches with high probability; training must cope and leave
  // a warning instead of diverging.
  GraphicalModel starved(2, {{0, 1}},
                         std::vector<double>{-59.0, -59.0, -59.0, 0.0});
  Dataset data;
  data.n = 2;
  data.samples = {3, 3, 3};
  AdamConfig cfg;
  cfg.iterations = 6;
  cfg.grad_samples = 1;
  cfg.source = GradientSource::QcgmSimulated;
  cfg.seed = 12;
  const auto [learned, trace] = learn_mle(starved, data, cfg);
  CHECK(trace.records.size() == 7);
  CHECK_FALSE(trace.warnings.empty());
  for (const auto &rec : trace.records) {
    CHECK(std::isfinite(rec.nll));
  }
}
