// Copyright 2026 The secagg-autotune Authors
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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace secagg {

// Splitmix64 finalizer (Steele, Lea & Flood; Vigna's fixed-increment
// variant). Integer-only, so streams are identical on every platform.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream-splitting rule: every independent stream is named by a seed plus
// a sequence of integer labels (purpose, round, user, ...). Labels are
// folded left-to-right through the splitmix64 finalizer:
//
//   h <- mix64((h + GAMMA) ^ mix64(label + GAMMA))
//
// Two label sequences that differ anywhere yield unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> labels) {
  constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = seed;
  for (std::uint64_t label : labels) {
    h = mix64((h + kGamma) ^ mix64(label + kGamma));
  }
  return h;
}

// Reserved purpose labels, one per independent use of randomness.
namespace stream {
inline constexpr std::uint64_t kRotationDiagonal = 1;  // Rademacher diagonal
inline constexpr std::uint64_t kQuantize = 2;          // stochastic rounding
inline constexpr std::uint64_t kPairwiseMask = 3;      // mask expansion
inline constexpr std::uint64_t kRoundRotation = 4;     // per-round rotation seed
inline constexpr std::uint64_t kSession = 5;           // per-round secagg session
inline constexpr std::uint64_t kCohort = 6;            // cohort sampling
inline constexpr std::uint64_t kClientShuffle = 7;     // local SGD shuffling
inline constexpr std::uint64_t kTask = 8;              // synthetic data
}  // namespace stream

// Seedable splitmix64 generator. 64-bit state, fixed gamma; output is
// bit-identical across platforms and runs for a given seed.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix64(z);
  }

  // Uniform on [0, 1), 53 bits of mantissa.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer on [0, k) by rejection, no modulo bias.
  std::uint64_t uniform_below(std::uint64_t k) {
    // threshold = 2^64 mod k; draws below it would bias the residue.
    const std::uint64_t threshold = (0 - k) % k;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % k;
    }
  }

  // Standard normal via Box-Muller. Consumes two draws per pair and caches
  // the second, so a stream of calls is reproducible from the seed alone.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace secagg
