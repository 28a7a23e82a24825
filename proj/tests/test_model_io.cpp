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

#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "oracles.hpp"
#include "qcgm/model_io.hpp"

using namespace qcgm;

TEST_CASE("serialization round-trips models exactly") {
  for (const auto &model : testing::random_suite_models(8, 515, -3.0, 2.0)) {
    const auto doc = model_to_json(model);
    const auto back = model_from_json(doc);
    CHECK(back.num_vertices() == model.num_vertices());
    CHECK(back.cliques() == model.cliques());
    REQUIRE(back.num_params() == model.num_params());
    for (std::size_t i = 0; i < model.num_params(); ++i) {
      // Doubles survive the trip bit for bit.
      CHECK(back.theta()[i] == model.theta()[i]);
    }
  }
}

TEST_CASE("encoding is canonical") {
  const auto model = testing::example_mixed();
  const auto a = model_to_json(model).dump();
  const auto b = model_to_json(model_from_json(model_to_json(model))).dump();
  CHECK(a == b);
  CHECK(model_hash(model) == model_hash(model_from_json(model_to_json(model))));
  CHECK(model_hash(model) != model_hash(testing::example_chain3()));
  CHECK(model_hash(model).rfind("fnv1a64:", 0) == 0);
  CHECK(model_hash(model).size() == 8 + 16);
}

TEST_CASE("document structure follows the published schema") {
  const auto doc = model_to_json(testing::example_chain3());
  CHECK(doc.at("format") == kModelFormatTag);
  CHECK(doc.at("n") == 3);
  REQUIRE(doc.at("cliques").size() == 2);
  CHECK(doc.at("cliques")[0] == nlohmann::json::array({0, 1}));
  REQUIRE(doc.at("theta").size() == 8);
  const auto &entry = doc.at("theta")[0];
  CHECK(entry.contains("clique_index"));
  CHECK(entry.contains("y_bits"));
  CHECK(entry.contains("value"));
}

TEST_CASE("sparse and permuted parameter entries are accepted") {
  nlohmann::json doc = {
      {"format", std::string(kModelFormatTag)},
      {"n", 2},
      {"cliques", nlohmann::json::array({nlohmann::json::array({0, 1})})},
      {"theta",
       nlohmann::json::array(
           {{{"clique_index", 0},
             {"y_bits", nlohmann::json::array({1, 1})},
             {"value", -0.5}},
            {{"clique_index", 0},
             {"y_bits", nlohmann::json::array({0, 1})},
             {"value", -0.25}}})},
  };
  const auto model = model_from_json(doc);
  CHECK(model.theta_entry(0, 0b00) == 0.0);
  CHECK(model.theta_entry(0, 0b01) == doctest::Approx(-0.25));
  CHECK(model.theta_entry(0, 0b10) == 0.0);
  CHECK(model.theta_entry(0, 0b11) == doctest::Approx(-0.5));
}

TEST_CASE("malformed documents are rejected with clear errors") {
  nlohmann::json good = model_to_json(testing::example_chain3());

  SUBCASE("wrong format tag") {
    good["format"] = "qcgm-model/9";
    CHECK_THROWS_AS(model_from_json(good), std::invalid_argument);
  }
  SUBCASE("missing fields") {
    good.erase("cliques");
    CHECK_THROWS_AS(model_from_json(good), std::invalid_argument);
  }
  SUBCASE("duplicate parameter entry") {
    good["theta"].push_back(good["theta"][0]);
    CHECK_THROWS_AS(model_from_json(good), std::invalid_argument);
  }
  SUBCASE("y_bits of the wrong width") {
    good["theta"][0]["y_bits"] = nlohmann::json::array({1, 0, 1});
    CHECK_THROWS_AS(model_from_json(good), std::invalid_argument);
  }
  SUBCASE("y_bits outside {0, 1}") {
    good["theta"][0]["y_bits"] = nlohmann::json::array({0, 2});
    CHECK_THROWS_AS(model_from_json(good), std::invalid_argument);
  }
  SUBCASE("y_bits of the wrong type") {
    good["theta"][0]["y_bits"] = "01";
    CHECK_THROWS_AS(model_from_json(good), std::invalid_argument);
  }
  SUBCASE("clique_index out of range") {
    good["theta"][0]["clique_index"] = 5;
    CHECK_THROWS_AS(model_from_json(good), std::invalid_argument);
  }
}

TEST_CASE("models survive a trip through the filesystem") {
  const auto model = testing::example_mixed();
  const auto path =
      (std::filesystem::temp_directory_path() / "qcgm_io_test.json").string();
  save_model(model, path);
  const auto back = load_model(path);
  CHECK(model_hash(back) == model_hash(model));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_model("/nonexistent/dir/model.json"),
                  std::runtime_error);
}

TEST_CASE("fnv1a64 matches the published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("hello") == 0xa430d84680aabd0bULL);
}
