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

#include <stdexcept>
#include <string>

namespace secagg {

// Vector length does not match the configured dimension, or a length is
// not a power of two where one is required.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// An argument is outside its documented domain (non-finite entry, value
// out of range, invalid parameter).
class ValueError : public std::invalid_argument {
 public:
  explicit ValueError(const std::string& what) : std::invalid_argument(what) {}
};

// Misuse of the aggregation session: self-pair mask, missing or duplicate
// user input, empty cohort.
class ProtocolError : public std::logic_error {
 public:
  explicit ProtocolError(const std::string& what) : std::logic_error(what) {}
};

// The circular moment estimator has no solution (data too dispersed).
// Callers fall back to their previous state.
class EstimateUndefined : public std::runtime_error {
 public:
  explicit EstimateUndefined(const std::string& what) : std::runtime_error(what) {}
};

// Experiment configuration failed validation; the message names the field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A client dataset is unusable (e.g. empty).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace secagg
