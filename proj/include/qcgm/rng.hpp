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
 * @file rng.hpp
 * Counter-based pseudo-random generator (Philox-4x64 with 10 rounds).
 *
 * Every stochastic routine in the library draws from a PhiloxStream keyed
 * by (seed, stream). Distinct stream ids give statistically independent
 * sequences, so per-shot and per-chain streams can be consumed in any
 * order, including concurrently, without changing results.
 *
 * The word sequence for a given key matches numpy.random.Philox, which is
 * convenient when cross-checking traces from the command line tools.
 */

#include <array>
#include <cstdint>
#include <limits>

namespace qcgm {

namespace detail {

inline void mulhilo64(std::uint64_t a, std::uint64_t b, std::uint64_t &hi,
                      std::uint64_t &lo) {
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(prod >> 64);
  lo = static_cast<std::uint64_t>(prod);
}

}  // namespace detail

class PhiloxStream {
 public:
  using result_type = std::uint64_t;

  explicit PhiloxStream(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream} {}

  /** Runs the 10-round bijection on one 256 bit counter block. */
  static std::array<std::uint64_t, 4> block(
      std::array<std::uint64_t, 4> ctr, std::array<std::uint64_t, 2> key) {
    constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi0, lo0, hi1, lo1;
      detail::mulhilo64(kMul0, ctr[0], hi0, lo0);
      detail::mulhilo64(kMul1, ctr[2], hi1, lo1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

  std::uint64_t next_u64() {
    if (cursor_ == 4) {
      // The counter advances before the block is produced, like the
      // numpy generator; 256 bit little-endian increment, wraparound is
      // unreachable in practice but kept well defined.
      for (int w = 0; w < 4; ++w) {
        if (++counter_[w] != 0) break;
      }
      buffer_ = block(counter_, key_);
      cursor_ = 0;
    }
    return buffer_[cursor_++];
  }

  /** Uniform double in [0, 1) with 53 random bits. */
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /** Uniform double in the open interval (0, 1); safe under log(). */
  double next_double_open() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

  // UniformRandomBitGenerator interface, so the standard distributions
  // can be layered on top of a stream.
  std::uint64_t operator()() { return next_u64(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> buffer_{};
  int cursor_ = 4;
};

}  // namespace qcgm
