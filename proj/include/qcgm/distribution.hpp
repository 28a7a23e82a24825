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

#include <cstdint>
#include <vector>

namespace qcgm {

/**
 * Probability table over all 2^n configurations of n bits, indexed with
 * the packed convention of graphical_model.hpp (vertex 0 is the most
 * significant bit of the index).
 */
struct DenseDistribution {
  std::uint32_t n = 0;
  std::vector<double> p;

  /** |sum(p) - 1| <= tol. */
  bool is_normalized(double tol = 1e-9) const;
  /** Rescales to unit mass. @throws std::domain_error on zero mass. */
  void normalize();
};

}  // namespace qcgm
