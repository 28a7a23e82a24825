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
 * @file metrics.hpp
 * Distribution comparison metrics used by the experiment harness and
 * the validation suite. All metrics require both inputs to be
 * normalized within 1e-9 and of equal length.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "qcgm/distribution.hpp"

namespace qcgm {

/** Classical fidelity (sum of sqrt(p*q)) squared; 1 iff p == q. */
double fidelity(std::span<const double> p, std::span<const double> q);
double fidelity(const DenseDistribution &p, const DenseDistribution &q);

/** Hellinger distance sqrt(1 - sqrt(fidelity)), in [0, 1]. */
double hellinger(std::span<const double> p, std::span<const double> q);
double hellinger(const DenseDistribution &p, const DenseDistribution &q);

/** Total variation distance, half the L1 difference. */
double total_variation(std::span<const double> p, std::span<const double> q);
double total_variation(const DenseDistribution &p, const DenseDistribution &q);

/**
 * Plain relative frequencies of packed samples over n bits. No
 * smoothing is applied; unseen configurations get exactly zero.
 */
DenseDistribution empirical_distribution(std::span<const std::uint32_t> samples,
                                         std::uint32_t n);

}  // namespace qcgm
