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
// Structured pseudorandom rotation R = H * D: an orthonormal Walsh-Hadamard
// matrix times a seeded Rademacher (+-1) diagonal. Inputs are zero-padded to
// the next power of two; the inverse transform truncates back.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "secagg/errors.hpp"
#include "secagg/fwht.hpp"
#include "secagg/prng.hpp"

namespace secagg {

struct RotationConfig {
  std::uint64_t seed = 0;
  std::size_t original_dim = 0;
  std::size_t padded_dim = 0;

  static RotationConfig create(std::uint64_t seed, std::size_t original_dim) {
    if (original_dim == 0) {
      throw DimensionError("RotationConfig: original_dim must be positive");
    }
    return RotationConfig{seed, original_dim, std::bit_ceil(original_dim)};
  }
};

// Deterministic +-1 signs for a given seed; one 64-bit draw per entry.
inline std::vector<double> sample_rademacher(std::uint64_t seed, std::size_t n) {
  Prng prng(seed);
  std::vector<double> signs(n);
  for (double& s : signs) s = (prng.next_u64() >> 63) ? -1.0 : 1.0;
  return signs;
}

namespace detail {
inline std::vector<double> rotation_diagonal(const RotationConfig& config) {
  return sample_rademacher(
      derive_seed(config.seed, {stream::kRotationDiagonal}), config.padded_dim);
}
}  // namespace detail

// z = H (D x), with x zero-padded to padded_dim. Preserves the l2 norm.
inline std::vector<double> rotate(std::span<const double> x,
                                  const RotationConfig& config) {
  if (x.size() != config.original_dim) {
    throw DimensionError("rotate: input length " + std::to_string(x.size()) +
                         " != original_dim " + std::to_string(config.original_dim));
  }
  const std::vector<double> diag = detail::rotation_diagonal(config);
  std::vector<double> z(config.padded_dim, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = diag[i] * x[i];
  fwht_inplace(z);
  return z;
}

// x = D (H z), truncated to original_dim. Inverse of rotate since both H
// and D are involutions.
inline std::vector<double> inverse_rotate(std::span<const double> z,
                                          const RotationConfig& config) {
  if (z.size() != config.padded_dim) {
    throw DimensionError("inverse_rotate: input length " + std::to_string(z.size()) +
                         " != padded_dim " + std::to_string(config.padded_dim));
  }
  const std::vector<double> diag = detail::rotation_diagonal(config);
  std::vector<double> w(z.begin(), z.end());
  fwht_inplace(w);
  std::vector<double> x(config.original_dim);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = diag[i] * w[i];
  return x;
}

}  // namespace secagg
