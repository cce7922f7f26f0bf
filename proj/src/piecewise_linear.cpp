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

#include "piecewise_linear.hpp"

#include <algorithm>
#include <cmath>

namespace latlip {

namespace {
// Merge tolerance for breakpoints produced by crossing insertion. Kept tiny so
// exact dyadic data (the interesting test families) is never perturbed.
inline double merge_eps(double x) {
  return 1e-13 * std::max(1.0, std::abs(x));
}
}  // namespace

PwLinear::PwLinear(std::vector<double> breakpoints, std::vector<double> values,
                   double left_slope, double right_slope)
    : xs_(std::move(breakpoints)),
      ys_(std::move(values)),
      left_slope_(left_slope),
      right_slope_(right_slope) {
  if (xs_.empty()) fail(ErrorCode::invalid_argument, "need >= 1 breakpoint");
  if (xs_.size() != ys_.size())
    fail(ErrorCode::invalid_argument, "breakpoint/value length mismatch");
  for (std::size_t i = 1; i < xs_.size(); ++i)
    if (!(xs_[i - 1] < xs_[i]))
      fail(ErrorCode::invalid_argument, "breakpoints must strictly increase");
  for (double x : xs_)
    if (!std::isfinite(x)) fail(ErrorCode::invalid_argument, "non-finite breakpoint");
  for (double y : ys_)
    if (!std::isfinite(y)) fail(ErrorCode::invalid_argument, "non-finite value");
  if (!std::isfinite(left_slope_) || !std::isfinite(right_slope_))
    fail(ErrorCode::invalid_argument, "non-finite tail slope");
}

PwLinear PwLinear::constant(double c) { return PwLinear({0.0}, {c}, 0.0, 0.0); }

PwLinear PwLinear::identity() { return PwLinear({0.0}, {0.0}, 1.0, 1.0); }

PwLinear PwLinear::scale_map(double c) { return PwLinear({0.0}, {0.0}, c, c); }

PwLinear PwLinear::cone(double x0, double y0, double k) {
  return PwLinear({x0}, {y0}, -k, k);
}

double PwLinear::eval(double v) const {
  if (v <= xs_.front()) return ys_.front() + left_slope_ * (v - xs_.front());
  if (v >= xs_.back()) return ys_.back() + right_slope_ * (v - xs_.back());
  auto it = std::upper_bound(xs_.begin(), xs_.end(), v);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  if (v == xs_[i]) return ys_[i];
  return ys_[i] + segment_slope(i) * (v - xs_[i]);
}

double PwLinear::segment_slope(std::size_t i) const {
  return (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
}

double PwLinear::lip_const() const {
  double m = std::max(std::abs(left_slope_), std::abs(right_slope_));
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    m = std::max(m, std::abs(segment_slope(i)));
  return m;
}

PwLinear PwLinear::simplified() const {
  if (xs_.size() <= 1) return *this;
  // Slope sequence around breakpoint i is slopes[i] | slopes[i+1]; a
  // breakpoint with no slope change is redundant. Only exactly equal slopes
  // are merged, so exact families stay exact.
  std::vector<double> slopes;
  slopes.reserve(xs_.size() + 1);
  slopes.push_back(left_slope_);
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    slopes.push_back(segment_slope(i));
  slopes.push_back(right_slope_);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (slopes[i] != slopes[i + 1]) {
      xs.push_back(xs_[i]);
      ys.push_back(ys_[i]);
    }
  }
  if (xs.empty()) {
    xs.push_back(xs_.front());
    ys.push_back(ys_.front());
  }
  return PwLinear(std::move(xs), std::move(ys), left_slope_, right_slope_);
}

namespace {

// Sorted union of two breakpoint lists.
std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename Op>
PwLinear combine(const PwLinear& f, const PwLinear& g, Op op, double ls,
                 double rs) {
  std::vector<double> xs = merge_breakpoints(f.breakpoints(), g.breakpoints());
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = op(f.eval(xs[i]), g.eval(xs[i]));
  return PwLinear(std::move(xs), std::move(ys), ls, rs);
}

}  // namespace

PwLinear pl_add(const PwLinear& f, const PwLinear& g) {
  return combine(
      f, g, [](double a, double b) { return a + b; },
      f.left_slope() + g.left_slope(), f.right_slope() + g.right_slope());
}

PwLinear pl_sub(const PwLinear& f, const PwLinear& g) {
  return combine(
      f, g, [](double a, double b) { return a - b; },
      f.left_slope() - g.left_slope(), f.right_slope() - g.right_slope());
}

PwLinear pl_scale(const PwLinear& f, double c) {
  std::vector<double> ys(f.values());
  for (double& y : ys) y *= c;
  return PwLinear(f.breakpoints(), std::move(ys), c * f.left_slope(),
                  c * f.right_slope());
}

PwLinear pl_min(const PwLinear& f, const PwLinear& g) {
  std::vector<double> xs = merge_breakpoints(f.breakpoints(), g.breakpoints());

  // Candidate crossing points: wherever the difference changes sign inside a
  // segment or on a tail, both functions being linear there.
  std::vector<double> candidates = xs;
  auto diff = [&](double x) { return f.eval(x) - g.eval(x); };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    double da = diff(xs[i]), db = diff(xs[i + 1]);
    if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
      double x = xs[i] + da * (xs[i + 1] - xs[i]) / (da - db);
      if (x > xs[i] && x < xs[i + 1]) candidates.push_back(x);
    }
  }
  double d0 = diff(xs.front());
  double sl = f.left_slope() - g.left_slope();
  if (sl != 0.0 && d0 != 0.0 && (d0 > 0.0) == (sl > 0.0))
    candidates.push_back(xs.front() - d0 / sl);
  double dn = diff(xs.back());
  double sr = f.right_slope() - g.right_slope();
  if (sr != 0.0 && dn != 0.0 && (dn > 0.0) != (sr > 0.0))
    candidates.push_back(xs.back() - dn / sr);

  std::sort(candidates.begin(), candidates.end());
  std::vector<double> cx, cy;
  cx.reserve(candidates.size());
  for (double x : candidates) {
    if (!cx.empty() && x - cx.back() <= merge_eps(x)) continue;
    cx.push_back(x);
  }
  cy.resize(cx.size());
  for (std::size_t i = 0; i < cx.size(); ++i)
    cy[i] = std::min(f.eval(cx[i]), g.eval(cx[i]));

  // Beyond all crossings one operand stays below; its tail slope wins.
  double left = sl > 0.0   ? f.left_slope()
                : sl < 0.0 ? g.left_slope()
                : (d0 <= 0.0 ? f.left_slope() : g.left_slope());
  double right = sr < 0.0   ? f.right_slope()
                 : sr > 0.0 ? g.right_slope()
                 : (dn <= 0.0 ? f.right_slope() : g.right_slope());
  return PwLinear(std::move(cx), std::move(cy), left, right).simplified();
}

PwLinear pl_max(const PwLinear& f, const PwLinear& g) {
  return pl_scale(pl_min(pl_scale(f, -1.0), pl_scale(g, -1.0)), -1.0);
}

ScalarLip::ScalarLip(PwLinear pl) : rep_(std::move(pl)) {}

ScalarLip ScalarLip::inv_one_plus_abs() {
  return ScalarLip(ClosedForm{ClosedFormId::inv_one_plus_abs, 1.0, 0.0});
}

double ScalarLip::eval(double v) const {
  if (const auto* pl = std::get_if<PwLinear>(&rep_)) return pl->eval(v);
  const auto& cf = std::get<ClosedForm>(rep_);
  switch (cf.id) {
    case ClosedFormId::inv_one_plus_abs:
      return 1.0 / (1.0 + std::abs(v)) + cf.shift;
  }
  return 0.0;
}

double ScalarLip::lip_const() const {
  if (const auto* pl = std::get_if<PwLinear>(&rep_)) return pl->lip_const();
  return std::get<ClosedForm>(rep_).certified_lip;
}

bool ScalarLip::is_pl() const { return std::holds_alternative<PwLinear>(rep_); }

const PwLinear& ScalarLip::pl() const {
  if (!is_pl())
    fail(ErrorCode::not_piecewise_linear,
         "closed-form operand; convert with pl_approx first");
  return std::get<PwLinear>(rep_);
}

double lip_const(const ScalarLip& phi) { return phi.lip_const(); }

ScalarLip normalize_lip0(const ScalarLip& phi) {
  double at0 = phi.eval(0.0);
  if (at0 == 0.0) return phi;
  if (phi.is_pl()) {
    const PwLinear& pl = phi.pl();
    // Pin the origin as a breakpoint with value exactly 0; plain value
    // shifting leaves an ulp-sized residue at 0 when it sits inside a
    // segment, and downstream invariants compare that value exactly.
    std::vector<double> xs(pl.breakpoints());
    std::vector<double> ys(pl.values());
    for (double& y : ys) y -= at0;
    auto it = std::lower_bound(xs.begin(), xs.end(), 0.0);
    std::size_t pos = static_cast<std::size_t>(it - xs.begin());
    if (it == xs.end() || *it != 0.0) {
      xs.insert(it, 0.0);
      ys.insert(ys.begin() + static_cast<std::ptrdiff_t>(pos), 0.0);
    } else {
      ys[pos] = 0.0;
    }
    return ScalarLip(
        PwLinear(std::move(xs), std::move(ys), pl.left_slope(), pl.right_slope()));
  }
  ScalarLip out = phi;
  std::get<ScalarLip::ClosedForm>(out.rep_).shift -= at0;
  return out;
}

PwLinear mcshane_extend(const std::vector<std::pair<double, double>>& samples,
                        double k, ExtendMode mode) {
  if (samples.empty()) fail(ErrorCode::empty_samples, "no samples");
  if (!(k >= 0.0) || !std::isfinite(k))
    fail(ErrorCode::incompatible_samples, "extension constant must be >= 0");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      double dy = std::abs(samples[i].second - samples[j].second);
      double dx = std::abs(samples[i].first - samples[j].first);
      if (dy > k * dx * (1.0 + 1e-12))
        fail(ErrorCode::incompatible_samples,
             "samples violate the declared Lipschitz constant");
    }
  }
  bool upper = mode == ExtendMode::upper;
  double sgn = upper ? 1.0 : -1.0;
  PwLinear acc = PwLinear::cone(samples[0].first, sgn * samples[0].second, k);
  for (std::size_t j = 1; j < samples.size(); ++j)
    acc = pl_min(acc, PwLinear::cone(samples[j].first, sgn * samples[j].second, k));
  return upper ? acc : pl_scale(acc, -1.0);
}

PwLinear dist_set_fn(const std::set<int>& s, double cap) {
  if (!(cap > 0.0)) fail(ErrorCode::invalid_argument, "cap must be positive");
  for (int v : s)
    if (v < 1) fail(ErrorCode::invalid_argument, "set elements must be positive integers");
  PwLinear out = pl_min(PwLinear::constant(cap), PwLinear::cone(0.0, 0.0, 1.0));
  for (int v : s)
    out = pl_min(out, PwLinear::cone(static_cast<double>(v), 0.0, 1.0));
  return out;
}

PwLinear pl_approx(const ScalarLip& phi, double a, double b, int n) {
  if (!(a < b)) fail(ErrorCode::invalid_argument, "need a < b");
  if (n < 1) fail(ErrorCode::invalid_argument, "need n >= 1");
  std::vector<double> xs(static_cast<std::size_t>(n) + 1), ys(xs.size());
  for (int i = 0; i <= n; ++i) {
    xs[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / n;
    ys[static_cast<std::size_t>(i)] = phi.eval(xs[static_cast<std::size_t>(i)]);
  }
  double ls = (ys[1] - ys[0]) / (xs[1] - xs[0]);
  double rs = (ys[xs.size() - 1] - ys[xs.size() - 2]) /
              (xs[xs.size() - 1] - xs[xs.size() - 2]);
  return PwLinear(std::move(xs), std::move(ys), ls, rs);
}

double pl_approx_error_bound(const ScalarLip& phi, double a, double b, int n) {
  if (!(a < b) || n < 1) fail(ErrorCode::invalid_argument, "need a < b, n >= 1");
  return phi.lip_const() * (b - a) / n;
}

}  // namespace latlip
