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

#include "common.hpp"

namespace latlip {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_space: return "EmptySpace";
    case ErrorCode::nonpositive_weight: return "NonpositiveWeight";
    case ErrorCode::space_mismatch: return "SpaceMismatch";
    case ErrorCode::empty_list: return "EmptyList";
    case ErrorCode::not_piecewise_linear: return "NotPiecewiseLinear";
    case ErrorCode::incompatible_samples: return "IncompatibleSamples";
    case ErrorCode::empty_samples: return "EmptySamples";
    case ErrorCode::support_too_large: return "SupportTooLarge";
    case ErrorCode::exponent_order: return "ExponentOrder";
    case ErrorCode::zero_multiplier: return "ZeroMultiplier";
    case ErrorCode::depth_overflow: return "DepthOverflow";
    case ErrorCode::s_out_of_range: return "SOutOfRange";
    case ErrorCode::nonzero_at_zero: return "NonzeroAtZero";
    case ErrorCode::degenerate_grid: return "DegenerateGrid";
    case ErrorCode::not_indicator: return "NotIndicator";
    case ErrorCode::grid_too_coarse: return "GridTooCoarse";
    case ErrorCode::config_error: return "ConfigError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& s : state_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::size_t Rng::index(std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(next_u64() % n);
}

bool Rng::coin() { return (next_u64() & 1u) != 0; }

double Rng::sign() { return coin() ? 1.0 : -1.0; }

Rng Rng::split(std::uint64_t stream) {
  std::uint64_t mix = next_u64() ^ (0xA0761D6478BD642FULL * (stream + 1));
  return Rng(mix);
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::uint64_t fnv1a64(const std::string& text) {
  return fnv1a64(text.data(), text.size());
}

}  // namespace latlip
