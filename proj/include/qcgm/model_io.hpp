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
 * @file model_io.hpp
 * JSON serialization of graphical models; see docs/formats.md for the
 * schema. Serialization is canonical: the same model always produces
 * the same bytes, which makes the content hash meaningful.
 */

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qcgm/graphical_model.hpp"

namespace qcgm {

inline constexpr std::string_view kModelFormatTag = "qcgm-model/1";

nlohmann::json model_to_json(const GraphicalModel &model);

/**
 * Inverse of model_to_json. Parameter entries may appear in any order
 * and may be omitted (omitted entries are zero); a duplicated entry is
 * an error.
 */
GraphicalModel model_from_json(const nlohmann::json &doc);

void save_model(const GraphicalModel &model, const std::string &path);
GraphicalModel load_model(const std::string &path);

/** FNV-1a over the bytes of @p data, 64 bit variant. */
std::uint64_t fnv1a64(std::string_view data);

/** Content hash "fnv1a64:<16 hex digits>" of the canonical encoding. */
std::string model_hash(const GraphicalModel &model);

}  // namespace qcgm
