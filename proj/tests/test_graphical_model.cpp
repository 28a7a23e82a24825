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
#include <limits>
#include <stdexcept>

#include "oracles.hpp"
#include "qcgm/graphical_model.hpp"

using namespace qcgm;

TEST_CASE("bit packing puts vertex 0 at the most significant position") {
  CHECK(bit_at(0b100, 0, 3) == 1);
  CHECK(bit_at(0b100, 1, 3) == 0);
  CHECK(bit_at(0b100, 2, 3) == 0);
  CHECK(bit_at(0b011, 1, 3) == 1);
  CHECK(bit_at(0b011, 2, 3) == 1);
}

TEST_CASE("construction validates structure") {
  CHECK_NOTHROW(GraphicalModel(2, {{0, 1}}));
  CHECK_NOTHROW(GraphicalModel(3, {{0, 1}, {1, 2}}));

  CHECK_THROWS_AS(GraphicalModel(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(GraphicalModel(2, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphicalModel(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphicalModel(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphicalModel(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphicalModel(2, {{0, 1}}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(
      GraphicalModel(2, {{0, 1}},
                     {0.0, 0.0, std::numeric_limits<double>::quiet_NaN(), 0.0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      GraphicalModel(2, {{0, 1}},
                     {0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0}),
      std::invalid_argument);
}

TEST_CASE("clique vertices are sorted on construction") {
  GraphicalModel model(3, {{2, 0}});
  REQUIRE(model.cliques().size() == 1);
  CHECK(model.cliques()[0] == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("parameter layout walks cliques then local configurations") {
  const auto model = testing::example_chain3();
  CHECK(model.num_params() == 8);
  CHECK(model.param_offset(0) == 0);
  CHECK(model.param_offset(1) == 4);
  CHECK(model.theta_entry(0, 0b00) == doctest::Approx(-0.3));
  CHECK(model.theta_entry(0, 0b11) == doctest::Approx(-0.7));
  CHECK(model.theta_entry(1, 0b01) == doctest::Approx(-0.4));

  // A missing theta means the all-zero vector of the right length.
  GraphicalModel flat(3, {{0, 1}, {1, 2}});
  CHECK(flat.num_params() == 8);
  for (double t : flat.theta()) CHECK(t == 0.0);
}

TEST_CASE("clique_config projects the packed global state") {
  const auto model = testing::example_chain3();
  // x = 0b101: vertex 0 and vertex 2 are set.
  CHECK(model.clique_config(0, 0b101) == 0b10);
  CHECK(model.clique_config(1, 0b101) == 0b01);
  CHECK(model.clique_config(0, 0b011) == 0b01);
  CHECK(model.clique_config(1, 0b011) == 0b11);

  GraphicalModel tri(3, {{0, 1, 2}});
  for (std::uint32_t x = 0; x < 8; ++x) {
    CHECK(tri.clique_config(0, x) == x);
  }
}

TEST_CASE("phi_vector is one-hot per clique") {
  const auto model = testing::example_chain3();
  for (std::uint32_t x = 0; x < 8; ++x) {
    const auto phi = phi_vector(model, x);
    REQUIRE(phi.size() == model.num_params());
    for (std::size_t c = 0; c < model.num_cliques(); ++c) {
      double sum = 0.0;
      for (std::uint32_t y = 0; y < 4; ++y) {
        const double e = phi[model.param_offset(c) + y];
        CHECK((e == 0.0 || e == 1.0));
        sum += e;
        CHECK(e == (model.clique_config(c, x) == y ? 1.0 : 0.0));
      }
      CHECK(sum == 1.0);
    }
  }
}

TEST_CASE("log_potential sums the selected parameters") {
  const auto model = testing::example_chain3();
  // x = 0b101 selects theta[(0,1), 10] and theta[(1,2), 01].
  CHECK(log_potential(model, 0b101) == doctest::Approx(-0.2 + -0.4));
  CHECK(log_potential(model, 0b000) == doctest::Approx(-0.3 + -0.9));
  for (std::uint32_t x = 0; x < 8; ++x) {
    double manual = 0.0;
    const auto phi = phi_vector(model, x);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      manual += phi[i] * model.theta()[i];
    }
    CHECK(log_potential(model, x) == doctest::Approx(manual).epsilon(1e-15));
  }
}

TEST_CASE("shifting every parameter changes log potentials uniformly") {
  const auto model = testing::example_mixed();
  const auto shifted = shift_parameters(model, 1.25);
  for (std::uint32_t x = 0; x < 16; ++x) {
    const double want =
        log_potential(model, x) + 1.25 * static_cast<double>(model.num_cliques());
    CHECK(log_potential(shifted, x) == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("normalization makes the largest entry zero") {
  SUBCASE("model with positive entries") {
    const auto model = testing::example_mixed();
    double shift = -1.0;
    const auto norm = normalize_for_circuit(model, &shift);
    CHECK(shift == doctest::Approx(0.8));
    double max_entry = -std::numeric_limits<double>::infinity();
    for (double t : norm.theta()) {
      CHECK(t <= 0.0);
      max_entry = std::max(max_entry, t);
    }
    CHECK(max_entry == doctest::Approx(0.0));
  }
  SUBCASE("already non-positive model is untouched") {
    const auto model = testing::example_chain3();
    double shift = -1.0;
    const auto norm = normalize_for_circuit(model, &shift);
    CHECK(shift == 0.0);
    for (std::size_t i = 0; i < model.num_params(); ++i) {
      CHECK(norm.theta()[i] == model.theta()[i]);
    }
  }
}

TEST_CASE("with_theta keeps structure and validates length") {
  const auto model = testing::example_chain3();
  auto other = model.with_theta(std::vector<double>(8, -0.5));
  CHECK(other.num_vertices() == 3);
  CHECK(other.theta_entry(1, 2) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(model.with_theta({1.0}), std::invalid_argument);
}

TEST_CASE("nested cliques are flagged but allowed") {
  GraphicalModel nested(3, {{0, 1, 2}, {0, 1}});
  const auto warnings = nested.structural_warnings();
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("contained") != std::string::npos);
  CHECK(testing::example_chain3().structural_warnings().empty());
}

TEST_CASE("datasets validate sample range and expose total weight") {
  Dataset data = testing::example_chain3_dataset();
  CHECK_NOTHROW(data.validate());
  CHECK(data.total_weight() == doctest::Approx(6.0));

  Dataset weighted = data;
  weighted.weights = {1.0, 2.0, 1.0, 1.0, 0.5, 0.5};
  CHECK_NOTHROW(weighted.validate());
  CHECK(weighted.total_weight() == doctest::Approx(6.0));

  Dataset bad = data;
  bad.samples.push_back(8);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  Dataset mismatched = data;
  mismatched.weights = {1.0};
  CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);

  Dataset negative = data;
  negative.weights = std::vector<double>(data.samples.size(), 1.0);
  negative.weights[0] = -1.0;
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}
