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

#ifndef LATLIP_MULTIPLIER_HPP
#define LATLIP_MULTIPLIER_HPP

#include <cstdint>

#include "function_space.hpp"

namespace latlip {

// Exponent triple for multiplication operators L^p -> L^q. The derived
// exponent satisfies 1/r = 1/q - 1/p, with r = inf when p = q. The exact-norm
// formula needs q <= p (otherwise only the search oracle applies).
struct MultiplierSpec {
  SpaceSpec source;  // L^p
  SpaceSpec target;  // L^q
  SpaceSpec r;

  static MultiplierSpec make(const SpaceSpec& p, const SpaceSpec& q);
  static MultiplierSpec make(double p, double q);
};

// M_h(f) = h * f pointwise.
MeasurableFn mult_apply(const MeasurableFn& h, const MeasurableFn& f);

// Operator norm of M_h : L^p -> L^q, computed as ||h||_{L^r}. On finite
// atomic spaces this equals sup{||h f||_q : ||f||_p = 1}.
double mult_norm(const MeasurableFn& h, const MultiplierSpec& spec);

// Unit-norm witness of the equality case: values |h_i|^(r/p) normalized to
// ||f*||_p = 1, so that ||h f*||_q = ||h||_r. Needs q < p, both finite.
MeasurableFn extremizer(const MeasurableFn& h, const MultiplierSpec& spec);

// Lower bound on sup{||h f||_q : ||f||_p = 1} by random restarts plus
// per-coordinate exact line search; monotone in the number of trials and
// works for any exponent pair, including q > p where no closed form is
// exposed.
double mult_norm_oracle(const MeasurableFn& h, double p, double q, int trials,
                        std::uint64_t seed = 0x517CC1B727220A95ULL);

}  // namespace latlip

#endif  // LATLIP_MULTIPLIER_HPP
