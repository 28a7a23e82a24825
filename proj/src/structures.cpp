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

#include "qcgm/structures.hpp"

#include <stdexcept>

#include "qcgm/rng.hpp"

namespace qcgm {

const std::vector<StructureSpec> &structure_suite() {
  static const std::vector<StructureSpec> suite = {
      {"single-vertex", 1, {{0}}},
      {"single-edge", 2, {{0, 1}}},
      {"chain-3", 3, {{0, 1}, {1, 2}}},
      {"triangle", 3, {{0, 1, 2}}},
      {"star-3", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {"two-edges", 4, {{0, 1}, {2, 3}}},
      {"chain-4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {"triangle-pendant", 4, {{0, 1, 2}, {2, 3}}},
  };
  return suite;
}

const StructureSpec &find_structure(const std::string &name) {
  for (const StructureSpec &spec : structure_suite()) {
    if (spec.name == name) return spec;
  }
  std::string known;
  for (const StructureSpec &spec : structure_suite()) {
    if (!known.empty()) known += ", ";
    known += spec.name;
  }
  throw std::invalid_argument("unknown structure \"" + name +
                              "\"; known structures: " + known);
}

GraphicalModel random_model(const StructureSpec &spec, std::uint64_t seed,
                            double lo, double hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("random_model: need lo < hi");
  }
  GraphicalModel skeleton(spec.n, spec.cliques);
  PhiloxStream rng(seed, 0);
  std::vector<double> theta(skeleton.num_params());
  for (double &t : theta) {
    t = lo + (hi - lo) * rng.next_double();
  }
  return skeleton.with_theta(std::move(theta));
}

}  // namespace qcgm
