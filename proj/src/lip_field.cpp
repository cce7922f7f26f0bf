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

#include "lip_field.hpp"

#include <algorithm>
#include <cmath>

namespace latlip {

namespace {
// Splits raw functions into normalized parts and shifts.
void split_shifts(std::vector<ScalarLip>& fns, std::vector<double>& shifts) {
  shifts.assign(fns.size(), 0.0);
  bool any = false;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    double at0 = fns[i].eval(0.0);
    if (at0 != 0.0) {
      shifts[i] = at0;
      fns[i] = normalize_lip0(fns[i]);
      any = true;
    }
  }
  if (!any) shifts.clear();
}
}  // namespace

LipField::LipField(SpacePtr space, std::vector<ScalarLip> fns)
    : space_(std::move(space)), fns_(std::move(fns)) {
  if (!space_) fail(ErrorCode::invalid_argument, "null space");
  if (fns_.size() != space_->size())
    fail(ErrorCode::space_mismatch, "one scalar function per atom required");
  split_shifts(fns_, shifts_);
}

LipField::LipField(SpacePtr space, std::vector<ScalarLip> fns,
                   std::vector<double> shifts)
    : LipField(std::move(space), std::move(fns)) {
  if (shifts.empty()) return;
  if (shifts.size() != fns_.size())
    fail(ErrorCode::space_mismatch, "one shift per atom required");
  bool any = false;
  if (shifts_.empty()) shifts_.assign(fns_.size(), 0.0);
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    shifts_[i] += shifts[i];
    if (shifts_[i] != 0.0) any = true;
  }
  if (!any) shifts_.clear();
}

LipField LipField::constant(SpacePtr space, const ScalarLip& fn) {
  if (!space) fail(ErrorCode::invalid_argument, "null space");
  return LipField(space, std::vector<ScalarLip>(space->size(), fn));
}

LipField LipField::zero(SpacePtr space) {
  return constant(std::move(space), ScalarLip::constant(0.0));
}

LipField LipField::pl_approximated(double a, double b, int n) const {
  std::vector<ScalarLip> fns;
  fns.reserve(fns_.size());
  for (const auto& fn : fns_)
    fns.push_back(fn.is_pl() ? fn : ScalarLip(pl_approx(fn, a, b, n)));
  return LipField(space_, std::move(fns), shifts_);
}

LipField SimpleField::to_field() const {
  if (!space) fail(ErrorCode::invalid_argument, "null space");
  std::vector<ScalarLip> fns(space->size(), ScalarLip::constant(0.0));
  std::vector<bool> seen(space->size(), false);
  for (const auto& [atoms, fn] : blocks) {
    for (std::size_t i : atoms) {
      if (i >= space->size())
        fail(ErrorCode::invalid_argument, "block atom index out of range");
      if (seen[i]) fail(ErrorCode::invalid_argument, "blocks overlap");
      seen[i] = true;
      fns[i] = fn;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    fail(ErrorCode::invalid_argument, "blocks do not cover the space");
  return LipField(space, std::move(fns));
}

MeasurableFn lip_profile(const LipField& field) {
  std::vector<double> values(field.size());
  for (std::size_t i = 0; i < field.size(); ++i)
    values[i] = field.fn(i).lip_const();
  return MeasurableFn(field.space(), std::move(values));
}

double kb_norm(const LipField& field, const SpaceSpec& spec) {
  return bfs_norm(spec, lip_profile(field));
}

double sll_norm(const LipField& field, const MultiplierSpec& spec) {
  return mult_norm(lip_profile(field), spec);
}

double sll_norm(const LipField& field, double p, double q) {
  return sll_norm(field, MultiplierSpec::make(p, q));
}

MeasurableFn field_distance_profile(const LipField& field,
                                    const LipField& other) {
  require_same_space(field.space(), other.space());
  std::vector<double> values(field.size());
  for (std::size_t i = 0; i < field.size(); ++i)
    values[i] = pl_sub(field.fn(i).pl(), other.fn(i).pl()).lip_const();
  return MeasurableFn(field.space(), std::move(values));
}

LipField truncate_field(const LipField& field, const LipField& approx) {
  require_same_space(field.space(), approx.space());
  std::vector<ScalarLip> fns;
  std::vector<double> shifts(field.size(), 0.0);
  fns.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    bool take_approx = approx.fn(i).lip_const() < field.fn(i).lip_const();
    fns.push_back(take_approx ? approx.fn(i) : field.fn(i));
    shifts[i] = take_approx ? approx.shift(i) : field.shift(i);
  }
  return LipField(field.space(), std::move(fns), std::move(shifts));
}

std::vector<int> binary_digits(double w, int depth) {
  if (!(w >= 0.0 && w <= 1.0))
    fail(ErrorCode::invalid_argument, "binary digits need w in [0,1]");
  std::vector<int> digits(static_cast<std::size_t>(depth));
  double t = w;
  for (int i = 0; i < depth; ++i) {
    t *= 2.0;
    if (t >= 1.0) {
      digits[static_cast<std::size_t>(i)] = 1;
      t -= 1.0;
    } else {
      digits[static_cast<std::size_t>(i)] = 0;
    }
  }
  return digits;
}

LipField binary_digit_field(const SpacePtr& space, int depth) {
  if (depth < 1 || depth > 40)
    fail(ErrorCode::depth_overflow, "digit depth must be in [1,40]");
  std::vector<ScalarLip> fns;
  fns.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    auto digits = binary_digits(space->atom(i), depth);
    std::set<int> zeros;
    for (int d = 0; d < depth; ++d)
      if (digits[static_cast<std::size_t>(d)] == 0) zeros.insert(d + 1);
    fns.push_back(ScalarLip(dist_set_fn(zeros, 0.5)));
  }
  return LipField(space, std::move(fns));
}

IntervalSet dyadic_preimage(double lambda, double s, int depth) {
  if (!(s > 0.0 && s < 0.5))
    fail(ErrorCode::s_out_of_range, "threshold must satisfy 0 < s < 1/2");
  if (depth < 1 || depth > 40)
    fail(ErrorCode::depth_overflow, "digit depth must be in [1,40]");
  // Nearest digit index (naturals start at 1).
  long long i0 = lambda < 1.0 ? 1 : std::llround(lambda);
  double dist = std::abs(lambda - static_cast<double>(i0));
  if (dist >= s) return IntervalSet();
  if (i0 > depth) return IntervalSet();  // beyond the truncated digit set
  if (i0 > 20)
    fail(ErrorCode::depth_overflow,
         "explicit interval enumeration capped at digit index 20");
  // {w : c_{i0}(w) = 0} is a union of 2^(i0-1) dyadic intervals.
  const double denom = std::ldexp(1.0, static_cast<int>(i0));  // 2^i0
  std::vector<std::pair<double, double>> intervals;
  const long long count = 1LL << (i0 - 1);
  intervals.reserve(static_cast<std::size_t>(count));
  for (long long j = 0; j < count; ++j) {
    double a = static_cast<double>(2 * j) / denom;
    double b = static_cast<double>(2 * j + 1) / denom;
    intervals.emplace_back(a, b);
  }
  return IntervalSet(std::move(intervals));
}

}  // namespace latlip
