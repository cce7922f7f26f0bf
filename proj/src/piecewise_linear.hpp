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

#ifndef LATLIP_PIECEWISE_LINEAR_HPP
#define LATLIP_PIECEWISE_LINEAR_HPP

#include <cstddef>
#include <set>
#include <variant>
#include <vector>

#include "common.hpp"

namespace latlip {

// Continuous piecewise-linear function on the whole real line: values at
// strictly increasing breakpoints, linear in between, and two tail slopes.
// This is the closed algebra behind every exact Lipschitz-constant claim:
// sums, differences, minima and maxima of members stay members, with
// breakpoints merged and crossing points inserted analytically.
class PwLinear {
 public:
  PwLinear(std::vector<double> breakpoints, std::vector<double> values,
           double left_slope, double right_slope);

  static PwLinear constant(double c);
  static PwLinear identity();
  static PwLinear scale_map(double c);  // v -> c*v
  // y0 + k*|v - x0|; the building block for distance functions and the
  // sup/inf extension formulas.
  static PwLinear cone(double x0, double y0, double k);

  double eval(double v) const;
  double operator()(double v) const { return eval(v); }

  // Exact maximum absolute slope over all segments and both tails.
  double lip_const() const;

  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& breakpoints() const { return xs_; }
  const std::vector<double>& values() const { return ys_; }
  double left_slope() const { return left_slope_; }
  double right_slope() const { return right_slope_; }
  // Slope on [xs_[i], xs_[i+1]].
  double segment_slope(std::size_t i) const;

  // Drops interior breakpoints where the slope does not change.
  PwLinear simplified() const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  double left_slope_;
  double right_slope_;
};

PwLinear pl_add(const PwLinear& f, const PwLinear& g);
PwLinear pl_sub(const PwLinear& f, const PwLinear& g);
PwLinear pl_scale(const PwLinear& f, double c);
// Exact pointwise min/max; crossings become new breakpoints.
PwLinear pl_min(const PwLinear& f, const PwLinear& g);
PwLinear pl_max(const PwLinear& f, const PwLinear& g);

// Scalar Lipschitz function: either an exact piecewise-linear value, or a
// certified closed form (evaluator plus a true Lipschitz upper bound).
class ScalarLip {
 public:
  enum class ClosedFormId { inv_one_plus_abs };

  ScalarLip(PwLinear pl);  // NOLINT: implicit by design
  static ScalarLip inv_one_plus_abs();  // v -> 1/(1+|v|), certified lip 1
  static ScalarLip identity() { return ScalarLip(PwLinear::identity()); }
  static ScalarLip constant(double c) { return ScalarLip(PwLinear::constant(c)); }

  double eval(double v) const;
  double operator()(double v) const { return eval(v); }
  double lip_const() const;

  bool is_pl() const;
  // Throws NotPiecewiseLinear for closed forms; convert through pl_approx.
  const PwLinear& pl() const;

 private:
  struct ClosedForm {
    ClosedFormId id;
    double certified_lip;
    double shift;  // added to the base evaluator; carries normalization
  };
  explicit ScalarLip(ClosedForm cf) : rep_(cf) {}

  std::variant<PwLinear, ClosedForm> rep_;

  friend ScalarLip normalize_lip0(const ScalarLip& phi);
};

double lip_const(const ScalarLip& phi);

// phi - phi(0): pins the value at the origin to 0 without touching the
// Lipschitz constant.
ScalarLip normalize_lip0(const ScalarLip& phi);

// Extension of finitely many samples to a K-Lipschitz function on the line:
// upper is x -> min_j (y_j + K|x - x_j|), lower is x -> max_j (y_j - K|x - x_j|).
enum class ExtendMode { upper, lower };
PwLinear mcshane_extend(const std::vector<std::pair<double, double>>& samples,
                        double k, ExtendMode mode);

// r -> min{cap, |r|, d(r, S)} for a finite set of positive integers S.
// 1-Lipschitz, zero at the origin and on S.
PwLinear dist_set_fn(const std::set<int>& s, double cap);

// Piecewise-linear interpolant of phi on n+1 equispaced nodes over [a,b].
// Sup error on [a,b] is at most pl_approx_error_bound (two functions of the
// same Lipschitz constant agreeing on a delta-grid differ by at most
// lip * delta).
PwLinear pl_approx(const ScalarLip& phi, double a, double b, int n);
double pl_approx_error_bound(const ScalarLip& phi, double a, double b, int n);

}  // namespace latlip

#endif  // LATLIP_PIECEWISE_LINEAR_HPP
