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

#ifndef LATLIP_LIP_FIELD_HPP
#define LATLIP_LIP_FIELD_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "function_space.hpp"
#include "multiplier.hpp"
#include "piecewise_linear.hpp"

namespace latlip {

// Field of scalar Lipschitz functions, one per atom. Stored functions are
// normalized to vanish at the origin; a function with phi(0) != 0 is split
// into its normalized part plus a per-atom shift (the image of 0), and the
// field is flagged affine-shifted. Norms always refer to the normalized part.
class LipField {
 public:
  LipField(SpacePtr space, std::vector<ScalarLip> fns);
  LipField(SpacePtr space, std::vector<ScalarLip> fns,
           std::vector<double> shifts);

  static LipField constant(SpacePtr space, const ScalarLip& fn);
  static LipField zero(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return fns_.size(); }
  const ScalarLip& fn(std::size_t i) const { return fns_[i]; }
  double shift(std::size_t i) const { return shifts_.empty() ? 0.0 : shifts_[i]; }
  bool affine_shifted() const { return !shifts_.empty(); }

  // Value of the field at atom i applied to v, shift included.
  double eval(std::size_t i, double v) const {
    return fns_[i].eval(v) + shift(i);
  }

  // Replaces closed-form entries by certified interpolants on [a,b].
  LipField pl_approximated(double a, double b, int n) const;

 private:
  SpacePtr space_;
  std::vector<ScalarLip> fns_;
  std::vector<double> shifts_;  // empty when no atom is shifted
};

// Piecewise-constant field over a disjoint exhaustive partition of the atoms.
struct SimpleField {
  SpacePtr space;
  std::vector<std::pair<std::vector<std::size_t>, ScalarLip>> blocks;

  // Validates the partition and expands to a per-atom field.
  LipField to_field() const;
};

// w -> Lip(field(w)).
MeasurableFn lip_profile(const LipField& field);

// Norm of the Lipschitz profile in X(mu): the vector-valued norm of the
// field with values measured by their Lipschitz constant.
double kb_norm(const LipField& field, const SpaceSpec& spec);

// Multiplier norm of the Lipschitz profile for L^p -> L^q; the operator norm
// of the superposition operator the field induces.
double sll_norm(const LipField& field, const MultiplierSpec& spec);
double sll_norm(const LipField& field, double p, double q);

// w -> Lip(field(w) - other(w)); both fields must be piecewise linear.
MeasurableFn field_distance_profile(const LipField& field, const LipField& other);

// Per atom, picks the approximant where its Lipschitz constant is strictly
// smaller and the original elsewhere; the resulting profile is the pointwise
// minimum of the two profiles.
LipField truncate_field(const LipField& field, const LipField& approx);

// Field over atoms in [0,1]: atom w with binary digits c_1..c_depth (the
// expansion that is eventually 0) gets r -> min{1/2, |r|, d(r, {i : c_i = 0})}.
LipField binary_digit_field(const SpacePtr& space, int depth);

// Extracts the leading binary digits of w in [0,1], terminating expansion.
std::vector<int> binary_digits(double w, int depth);

// Sublevel set {w : min({1/2} u {|lambda - i| : c_i(w) = 0, i <= depth}) < s}
// as an explicit union of dyadic intervals. Empty when no natural number is
// within s of lambda or the relevant digit index exceeds depth.
IntervalSet dyadic_preimage(double lambda, double s, int depth);

}  // namespace latlip

#endif  // LATLIP_LIP_FIELD_HPP
