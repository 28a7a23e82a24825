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

#include "qcgm/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace qcgm {

nlohmann::json model_to_json(const GraphicalModel &model) {
  nlohmann::json doc;
  doc["format"] = kModelFormatTag;
  doc["n"] = model.num_vertices();
  doc["cliques"] = model.cliques();
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t c = 0; c < model.num_cliques(); ++c) {
    const std::size_t width = model.cliques()[c].size();
    const std::uint32_t configs = std::uint32_t{1} << width;
    for (std::uint32_t y = 0; y < configs; ++y) {
      std::vector<int> y_bits(width);
      for (std::size_t k = 0; k < width; ++k) {
        y_bits[k] = static_cast<int>(
            bit_at(y, static_cast<std::uint32_t>(k),
                   static_cast<std::uint32_t>(width)));
      }
      entries.push_back({{"clique_index", c},
                         {"value", model.theta_entry(c, y)},
                         {"y_bits", y_bits}});
    }
  }
  doc["theta"] = std::move(entries);
  return doc;
}

GraphicalModel model_from_json(const nlohmann::json &doc) try {
  if (!doc.is_object() || doc.value("format", "") != kModelFormatTag) {
    throw std::invalid_argument("model document is missing the format tag \"" +
                                std::string(kModelFormatTag) + "\"");
  }
  const std::uint32_t n = doc.at("n").get<std::uint32_t>();
  const auto cliques =
      doc.at("cliques").get<std::vector<std::vector<std::uint32_t>>>();
  GraphicalModel skeleton(n, cliques);

  std::vector<double> theta(skeleton.num_params(), 0.0);
  std::vector<bool> seen(skeleton.num_params(), false);
  if (doc.contains("theta")) {
    for (const auto &entry : doc.at("theta")) {
      const std::size_t c = entry.at("clique_index").get<std::size_t>();
      if (c >= skeleton.num_cliques()) {
        throw std::invalid_argument("theta entry names a missing clique");
      }
      const auto y_bits = entry.at("y_bits").get<std::vector<int>>();
      const std::size_t width = skeleton.cliques()[c].size();
      if (y_bits.size() != width) {
        throw std::invalid_argument("theta entry has the wrong y_bits length "
                                    "for its clique");
      }
      std::uint32_t y = 0;
      for (int b : y_bits) {
        if (b != 0 && b != 1) {
          throw std::invalid_argument("y_bits entries must be 0 or 1");
        }
        y = (y << 1) | static_cast<std::uint32_t>(b);
      }
      const std::size_t slot = skeleton.param_offset(c) + y;
      if (seen[slot]) {
        throw std::invalid_argument("duplicate theta entry for clique " +
                                    std::to_string(c));
      }
      seen[slot] = true;
      theta[slot] = entry.at("value").get<double>();
    }
  }
  return skeleton.with_theta(std::move(theta));
} catch (const nlohmann::json::exception &err) {
  // Missing keys and type mismatches surface as one error family.
  throw std::invalid_argument(std::string("malformed model document: ") +
                              err.what());
}

void save_model(const GraphicalModel &model, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open \"" + path + "\" for writing");
  }
  out << model_to_json(model).dump(2) << "\n";
  if (!out) {
    throw std::runtime_error("failed writing \"" + path + "\"");
  }
}

GraphicalModel load_model(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open \"" + path + "\"");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error &err) {
    throw std::runtime_error("\"" + path + "\" is not valid JSON: " +
                             err.what());
  }
  return model_from_json(doc);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char byte : data) {
    h ^= byte;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string model_hash(const GraphicalModel &model) {
  const std::string canonical = model_to_json(model).dump();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical)));
  return buf;
}

}  // namespace qcgm
