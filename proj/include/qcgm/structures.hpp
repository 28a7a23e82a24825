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
 * @file structures.hpp
 * The fixed catalogue of small benchmark graphs used by the experiment
 * harness and the validation suite, and random model generation over
 * them.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "qcgm/graphical_model.hpp"

namespace qcgm {

struct StructureSpec {
  std::string name;
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> cliques;
};

/** All benchmark structures, smallest first. */
const std::vector<StructureSpec> &structure_suite();

/** @throws std::invalid_argument listing the known names on a miss. */
const StructureSpec &find_structure(const std::string &name);

/**
 * Model over @p spec with parameters drawn i.i.d. uniformly from
 * [lo, hi). The default range keeps models circuit-ready without
 * normalization while spanning clearly non-uniform distributions.
 */
GraphicalModel random_model(const StructureSpec &spec, std::uint64_t seed,
                            double lo = -2.0, double hi = 0.0);

}  // namespace qcgm
