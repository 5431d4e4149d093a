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
//
// Two quantizers:
//  - quantize_mod: unbounded stochastic quantization followed by reduction
//    mod k. Out-of-range values wrap; nothing is clipped.
//  - clip_quantize: the classical baseline, clip to [-t, t] then quantize
//    with kappa uniform levels (-t -> 0, +t -> kappa-1).

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "secagg/errors.hpp"
#include "secagg/prng.hpp"

namespace secagg {

enum class Rounding { kStochastic, kNearest };

struct QuantizerParams {
  double bin_size = 1.0;     // b > 0
  std::uint64_t modulus = 2; // k >= 2

  void validate() const {
    if (!(bin_size > 0.0) || !std::isfinite(bin_size)) {
      throw ValueError("QuantizerParams: bin_size must be positive and finite");
    }
    if (modulus < 2 || modulus > (1ULL << 62)) {
      throw ValueError("QuantizerParams: modulus must be in [2, 2^62]");
    }
  }
};

struct ClipQuantizerParams {
  double clip_range = 1.0;    // t > 0
  std::uint64_t levels = 2;   // kappa >= 2

  void validate() const {
    if (!(clip_range > 0.0) || !std::isfinite(clip_range)) {
      throw ValueError("ClipQuantizerParams: clip_range must be positive and finite");
    }
    if (levels < 2 || levels > (1ULL << 62)) {
      throw ValueError("ClipQuantizerParams: levels must be in [2, 2^62]");
    }
  }
};

// Rounds r down with probability ceil(r)-r, up otherwise, so the result is
// unbiased: E[stochastic_round(r)] = r. Integers are returned unchanged
// without consuming randomness.
inline std::int64_t stochastic_round(double r, Prng& prng) {
  if (!std::isfinite(r)) throw ValueError("stochastic_round: non-finite input");
  if (std::abs(r) >= 0x1.0p62) {
    throw ValueError("stochastic_round: |input| >= 2^62");
  }
  const double lo = std::floor(r);
  const double frac = r - lo;
  if (frac == 0.0) return static_cast<std::int64_t>(lo);
  return static_cast<std::int64_t>(lo) + (prng.uniform() < frac ? 1 : 0);
}

// Round-half-away-from-zero; the deterministic alternative.
inline std::int64_t round_nearest(double r) {
  if (!std::isfinite(r)) throw ValueError("round_nearest: non-finite input");
  if (std::abs(r) >= 0x1.0p62) throw ValueError("round_nearest: |input| >= 2^62");
  return std::llround(r);
}

namespace detail {
inline std::uint64_t floor_mod(std::int64_t m, std::uint64_t k) {
  const std::int64_t ks = static_cast<std::int64_t>(k);
  std::int64_t r = m % ks;
  if (r < 0) r += ks;
  return static_cast<std::uint64_t>(r);
}
}  // namespace detail

// y_i = round(z_i / b) mod k, result in [0, k). No clipping: values beyond
// the representable range wrap around.
inline std::vector<std::uint64_t> quantize_mod(std::span<const double> z,
                                               const QuantizerParams& params,
                                               Prng& prng,
                                               Rounding rounding = Rounding::kStochastic) {
  params.validate();
  std::vector<std::uint64_t> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!std::isfinite(z[i])) throw ValueError("quantize_mod: non-finite entry");
    const double scaled = z[i] / params.bin_size;
    const std::int64_t m = rounding == Rounding::kStochastic
                               ? stochastic_round(scaled, prng)
                               : round_nearest(scaled);
    out[i] = detail::floor_mod(m, params.modulus);
  }
  return out;
}

// Lifts each residue to its centered representative m in
// [-ceil(k/2), floor(k/2)) and scales by b.
inline std::vector<double> dequantize_sum(std::span<const std::uint64_t> aggregate,
                                          const QuantizerParams& params) {
  params.validate();
  const std::uint64_t k = params.modulus;
  const std::uint64_t half = k / 2;  // floor(k/2) = window upper bound
  std::vector<double> out(aggregate.size());
  for (std::size_t i = 0; i < aggregate.size(); ++i) {
    const std::uint64_t y = aggregate[i];
    if (y >= k) {
      throw ValueError("dequantize_sum: entry " + std::to_string(y) +
                       " outside [0, " + std::to_string(k) + ")");
    }
    const std::int64_t m = y < half ? static_cast<std::int64_t>(y)
                                    : static_cast<std::int64_t>(y) -
                                          static_cast<std::int64_t>(k);
    out[i] = static_cast<double>(m) * params.bin_size;
  }
  return out;
}

// Baseline path: clip to [-t, t], then quantize with uniform bins of width
// 2t/(kappa-1) so that -t maps to 0 and +t maps to kappa-1.
inline std::vector<std::uint64_t> clip_quantize(std::span<const double> x,
                                                const ClipQuantizerParams& params,
                                                Prng& prng,
                                                Rounding rounding = Rounding::kStochastic) {
  params.validate();
  const double t = params.clip_range;
  const double width = 2.0 * t / static_cast<double>(params.levels - 1);
  std::vector<std::uint64_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw ValueError("clip_quantize: non-finite entry");
    const double clipped = std::min(std::max(x[i], -t), t);
    const double scaled = (clipped + t) / width;  // in [0, kappa-1]
    const std::int64_t q = rounding == Rounding::kStochastic
                               ? stochastic_round(scaled, prng)
                               : round_nearest(scaled);
    out[i] = static_cast<std::uint64_t>(
        std::min<std::int64_t>(std::max<std::int64_t>(q, 0),
                               static_cast<std::int64_t>(params.levels - 1)));
  }
  return out;
}

// Recovers the sum of n clip-quantized vectors from the summed codes
// (exact when the codes were aggregated with modulus >= n*kappa):
// each user's value is q*width - t, so the sum is width*sum(q) - n*t.
inline std::vector<double> clip_dequantize_sum(std::span<const std::uint64_t> code_sum,
                                               const ClipQuantizerParams& params,
                                               std::size_t n_users) {
  params.validate();
  const double t = params.clip_range;
  const double width = 2.0 * t / static_cast<double>(params.levels - 1);
  std::vector<double> out(code_sum.size());
  for (std::size_t i = 0; i < code_sum.size(); ++i) {
    out[i] = width * static_cast<double>(code_sum[i]) -
             static_cast<double>(n_users) * t;
  }
  return out;
}

}  // namespace secagg
