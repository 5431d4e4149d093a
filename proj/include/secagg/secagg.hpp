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
// Functional model of pairwise-mask secure aggregation. Every pair of users
// shares a seed that expands to a 0-sum pair of masks mod k; a masked input
// is uniform on [0, k)^d on its own, while the sum of all masked inputs
// equals the sum of the plain inputs mod k, exactly.
//
// This is the functional core only: seeds are derived from a session seed
// rather than agreed via key exchange, and there is no dropout recovery.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "secagg/errors.hpp"
#include "secagg/prng.hpp"

namespace secagg {

struct SecAggSession {
  std::size_t n_users = 0;
  std::size_t dim = 0;
  std::uint64_t modulus = 2;
  std::uint64_t session_seed = 0;

  static SecAggSession create(std::size_t n_users, std::size_t dim,
                              std::uint64_t modulus, std::uint64_t session_seed) {
    if (n_users < 1) throw ProtocolError("SecAggSession: need at least one user");
    if (dim < 1) throw DimensionError("SecAggSession: dim must be positive");
    if (modulus < 2 || modulus > (1ULL << 62)) {
      throw ValueError("SecAggSession: modulus must be in [2, 2^62]");
    }
    return SecAggSession{n_users, dim, modulus, session_seed};
  }
};

struct MaskedInput {
  std::size_t user = 0;
  std::vector<std::uint64_t> values;  // entries in [0, modulus)
};

// Mask that user u adds for its pair with v. The pair seed is derived from
// the unordered pair {u, v}, so both sides expand the same base vector; the
// lower-id side adds it and the higher-id side adds its mod-k negation:
// derive_mask(u, v) + derive_mask(v, u) = 0 (mod k), entrywise.
inline std::vector<std::uint64_t> derive_mask(const SecAggSession& session,
                                              std::size_t u, std::size_t v) {
  if (u == v) throw ProtocolError("derive_mask: self-pair");
  if (u >= session.n_users || v >= session.n_users) {
    throw ProtocolError("derive_mask: user id out of range");
  }
  const std::size_t lo = std::min(u, v);
  const std::size_t hi = std::max(u, v);
  Prng prng(derive_seed(session.session_seed,
                        {stream::kPairwiseMask, lo, hi}));
  const std::uint64_t k = session.modulus;
  std::vector<std::uint64_t> mask(session.dim);
  for (std::uint64_t& m : mask) m = prng.uniform_below(k);
  if (u > v) {
    for (std::uint64_t& m : mask) m = (k - m) % k;
  }
  return mask;
}

// values = (y + sum of u's pair masks) mod k. With a single user there are
// no pairs and the input passes through unchanged.
inline MaskedInput mask_input(const SecAggSession& session, std::size_t u,
                              std::span<const std::uint64_t> y) {
  if (u >= session.n_users) throw ProtocolError("mask_input: user id out of range");
  if (y.size() != session.dim) {
    throw DimensionError("mask_input: input length " + std::to_string(y.size()) +
                         " != session dim " + std::to_string(session.dim));
  }
  const std::uint64_t k = session.modulus;
  MaskedInput out;
  out.user = u;
  out.values.assign(y.begin(), y.end());
  for (std::uint64_t value : out.values) {
    if (value >= k) throw ValueError("mask_input: entry outside [0, k)");
  }
  for (std::size_t v = 0; v < session.n_users; ++v) {
    if (v == u) continue;
    const std::vector<std::uint64_t> mask = derive_mask(session, u, v);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
      out.values[i] = (out.values[i] + mask[i]) % k;
    }
  }
  return out;
}

// Entrywise sum mod k over exactly one input per user. All pair masks
// cancel, leaving (sum of y^u) mod k.
inline std::vector<std::uint64_t> aggregate(std::span<const MaskedInput> inputs,
                                            const SecAggSession& session) {
  if (inputs.size() != session.n_users) {
    throw ProtocolError("aggregate: expected " + std::to_string(session.n_users) +
                        " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<bool> seen(session.n_users, false);
  const std::uint64_t k = session.modulus;
  std::vector<std::uint64_t> sum(session.dim, 0);
  for (const MaskedInput& input : inputs) {
    if (input.user >= session.n_users || seen[input.user]) {
      throw ProtocolError("aggregate: missing or duplicate user " +
                          std::to_string(input.user));
    }
    seen[input.user] = true;
    if (input.values.size() != session.dim) {
      throw DimensionError("aggregate: input length mismatch");
    }
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] = (sum[i] + input.values[i] % k) % k;
    }
  }
  return sum;
}

}  // namespace secagg
