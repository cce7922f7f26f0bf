// Copyright 2026 The latlip authors
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

#ifndef LATLIP_COMMON_HPP
#define LATLIP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latlip {

inline constexpr const char* kVersion = "0.1.0";

enum class ErrorCode {
  empty_space,
  nonpositive_weight,
  space_mismatch,
  empty_list,
  not_piecewise_linear,
  incompatible_samples,
  empty_samples,
  support_too_large,
  exponent_order,
  zero_multiplier,
  depth_overflow,
  s_out_of_range,
  nonzero_at_zero,
  degenerate_grid,
  not_indicator,
  grid_too_coarse,
  config_error,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Deterministic PRNG (xoshiro256++ seeded through splitmix64). The standard
// <random> distributions are not pinned across library implementations, so
// everything that feeds report content draws from this generator instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  // Uniform index in [0, n).
  std::size_t index(std::size_t n);
  bool coin();
  // +1 or -1.
  double sign();
  // Independent child stream.
  Rng split(std::uint64_t stream);

 private:
  std::uint64_t state_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

// FNV-1a over raw bytes; used to fingerprint scenario files in reports.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(const std::string& text);

}  // namespace latlip

#endif  // LATLIP_COMMON_HPP
