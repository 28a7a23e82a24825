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

#include "qcgm/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace qcgm {

namespace {

void check_pair(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument("metric inputs must have equal nonzero size");
  }
  for (std::span<const double> d : {p, q}) {
    double mass = 0.0;
    for (double v : d) {
      if (!(v >= 0.0)) {
        throw std::invalid_argument("metric input has a negative entry");
      }
      mass += v;
    }
    if (std::abs(mass - 1.0) > 1e-9) {
      throw std::invalid_argument("metric input is not normalized");
    }
  }
}

}  // namespace

double fidelity(std::span<const double> p, std::span<const double> q) {
  check_pair(p, q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += std::sqrt(p[i] * q[i]);
  }
  return acc * acc;
}

double hellinger(std::span<const double> p, std::span<const double> q) {
  check_pair(p, q);
  double bc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bc += std::sqrt(p[i] * q[i]);
  }
  // Bhattacharyya coefficients can exceed 1 by rounding; clamp so the
  // square root stays real.
  return std::sqrt(std::max(0.0, 1.0 - bc));
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  check_pair(p, q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += std::abs(p[i] - q[i]);
  }
  return 0.5 * acc;
}

double fidelity(const DenseDistribution &p, const DenseDistribution &q) {
  return fidelity(std::span<const double>(p.p), std::span<const double>(q.p));
}

double hellinger(const DenseDistribution &p, const DenseDistribution &q) {
  return hellinger(std::span<const double>(p.p), std::span<const double>(q.p));
}

double total_variation(const DenseDistribution &p,
                       const DenseDistribution &q) {
  return total_variation(std::span<const double>(p.p),
                         std::span<const double>(q.p));
}

DenseDistribution empirical_distribution(std::span<const std::uint32_t> samples,
                                         std::uint32_t n) {
  if (n == 0 || n >= 32) {
    throw std::invalid_argument("empirical_distribution needs 1 <= n < 32");
  }
  if (samples.empty()) {
    throw std::invalid_argument("empirical_distribution needs samples");
  }
  DenseDistribution out;
  out.n = n;
  out.p.assign(std::size_t{1} << n, 0.0);
  const double w = 1.0 / static_cast<double>(samples.size());
  for (std::uint32_t s : samples) {
    if (s >= out.p.size()) {
      throw std::invalid_argument("sample exceeds the configuration range");
    }
    out.p[s] += w;
  }
  return out;
}

}  // namespace qcgm
