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

#include "multiplier.hpp"

#include <algorithm>
#include <cmath>

namespace latlip {

MultiplierSpec MultiplierSpec::make(const SpaceSpec& p, const SpaceSpec& q) {
  MultiplierSpec spec{p, q, SpaceSpec::linf()};
  if (p.is_inf) {
    spec.r = q;
    return spec;
  }
  if (q.is_inf || q.p > p.p)
    fail(ErrorCode::exponent_order,
         "exact multiplier norm needs q <= p (inclusion L^p into L^q)");
  if (q.p == p.p) return spec;  // r = inf
  // 1/r = 1/q - 1/p, rearranged to one rounding step.
  spec.r = SpaceSpec::lp(p.p * q.p / (p.p - q.p));
  return spec;
}

MultiplierSpec MultiplierSpec::make(double p, double q) {
  return make(SpaceSpec::lp(p), SpaceSpec::lp(q));
}

MeasurableFn mult_apply(const MeasurableFn& h, const MeasurableFn& f) {
  return pointwise_product(h, f);
}

double mult_norm(const MeasurableFn& h, const MultiplierSpec& spec) {
  return bfs_norm(spec.r, h);
}

MeasurableFn extremizer(const MeasurableFn& h, const MultiplierSpec& spec) {
  if (spec.source.is_inf || spec.r.is_inf)
    fail(ErrorCode::exponent_order, "extremizer needs q < p, both finite");
  if (max_abs(h) == 0.0)
    fail(ErrorCode::zero_multiplier, "zero multiplier has no extremizer");
  const double exponent = spec.r.p / spec.source.p;
  std::vector<double> values(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    values[i] = std::pow(std::abs(h[i]), exponent);
  MeasurableFn f(h.space(), std::move(values));
  return scale(f, 1.0 / bfs_norm(spec.source, f));
}

namespace {

double ratio(const MeasurableFn& h, const MeasurableFn& f, double p, double q) {
  double denom = bfs_norm(SpaceSpec::lp(p), f);
  if (denom == 0.0) return 0.0;
  return bfs_norm(SpaceSpec::lp(q), mult_apply(h, f)) / denom;
}

// Exact per-coordinate maximization of ||h f||_q / ||f||_p over f_i >= 0 with
// the other coordinates fixed. Stationarity gives t^(p-q) = |h_i|^q * B / A
// where A, B are the q- and p-sums over the remaining coordinates; the q < p
// substitution u = f^p makes the problem concave, so sweeping coordinates
// climbs to the global optimum.
double coordinate_ascent(const MeasurableFn& h, std::vector<double> f, double p,
                         double q, int max_sweeps) {
  const auto& space = *h.space();
  const std::size_t n = f.size();
  double best = 0.0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double sq = 0.0, sp = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sq += std::pow(std::abs(h[j]) * f[j], q) * space.weight(j);
      sp += std::pow(f[j], p) * space.weight(j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      double tq = std::pow(std::abs(h[i]) * f[i], q) * space.weight(i);
      double tp = std::pow(f[i], p) * space.weight(i);
      double a = std::max(sq - tq, 0.0);
      double b = std::max(sp - tp, 0.0);
      double t;
      if (std::abs(h[i]) == 0.0) {
        t = 0.0;
      } else if (a <= 0.0 || b <= 0.0) {
        continue;  // everything else vanished; any positive value is optimal
      } else {
        t = std::pow(std::pow(std::abs(h[i]), q) * b / a, 1.0 / (p - q));
      }
      f[i] = t;
      sq = a + std::pow(std::abs(h[i]) * t, q) * space.weight(i);
      sp = b + std::pow(t, p) * space.weight(i);
    }
    if (sp <= 0.0) break;
    // Rescale to the unit sphere so repeated sweeps stay well conditioned.
    double norm_p = std::pow(sp, 1.0 / p);
    for (double& v : f) v /= norm_p;
    double value = std::pow(sq, 1.0 / q) / norm_p;
    if (value <= best * (1.0 + 1e-14)) {
      best = std::max(best, value);
      break;
    }
    best = value;
  }
  return best;
}

}  // namespace

double mult_norm_oracle(const MeasurableFn& h, double p, double q, int trials,
                        std::uint64_t seed) {
  if (!(p >= 1.0) || !(q >= 1.0) || !std::isfinite(p) || !std::isfinite(q))
    fail(ErrorCode::invalid_argument, "oracle needs finite exponents >= 1");
  const auto& space = *h.space();
  const std::size_t n = h.size();

  // Single-atom candidates: ratio |h_i| * mu_i^(1/q - 1/p). These are exact
  // optima when q >= p (the objective is then convex over the simplex of
  // p-th powers, so a vertex wins).
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::abs(h[i]) *
               std::pow(space.weight(i), 1.0 / q - 1.0 / p);
    best = std::max(best, v);
  }
  if (q >= p) return best;

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Rng local = rng.split(static_cast<std::uint64_t>(t));
    std::vector<double> f(n);
    for (double& v : f) v = 0.05 + local.uniform();
    best = std::max(best, coordinate_ascent(h, std::move(f), p, q, 400));
  }
  return best;
}

}  // namespace latlip
