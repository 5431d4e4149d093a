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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "secagg/errors.hpp"

namespace secagg {

inline bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place orthonormal Walsh-Hadamard transform: butterfly passes followed
// by a single 1/sqrt(n) scaling, so the transform is its own inverse.
// O(n log n) time, O(1) extra space.
inline void fwht_inplace(std::span<double> data) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw DimensionError("fwht: length " + std::to_string(n) +
                         " is not a power of two");
  }
  for (std::size_t h = 1; h < n; h *= 2) {
    for (std::size_t i = 0; i < n; i += h * 2) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = data[j];
        const double y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (double& v : data) v *= scale;
}

inline std::vector<double> fwht(std::vector<double> v) {
  fwht_inplace(v);
  return v;
}

}  // namespace secagg
