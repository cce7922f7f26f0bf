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

#include "free_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace latlip {

Molecule::Molecule(std::vector<double> support, std::vector<double> coeffs) {
  if (support.size() != coeffs.size())
    fail(ErrorCode::invalid_argument, "support/coefficient length mismatch");
  std::map<double, double> merged;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!std::isfinite(support[i]) || !std::isfinite(coeffs[i]))
      fail(ErrorCode::invalid_argument, "non-finite molecule data");
    if (support[i] == 0.0) continue;  // delta_0 is the zero functional
    merged[support[i]] += coeffs[i];
  }
  for (const auto& [x, a] : merged) {
    if (a == 0.0) continue;
    support_.push_back(x);
    coeffs_.push_back(a);
  }
}

Molecule add(const Molecule& a, const Molecule& b) {
  std::vector<double> support = a.support();
  std::vector<double> coeffs = a.coeffs();
  support.insert(support.end(), b.support().begin(), b.support().end());
  coeffs.insert(coeffs.end(), b.coeffs().begin(), b.coeffs().end());
  return Molecule(std::move(support), std::move(coeffs));
}

Molecule scale(const Molecule& m, double c) {
  std::vector<double> coeffs = m.coeffs();
  for (double& a : coeffs) a *= c;
  return Molecule(m.support(), std::move(coeffs));
}

double pair(const Molecule& m, const ScalarLip& phi) {
  const double at0 = phi.eval(0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    acc += m.coeffs()[i] * (phi.eval(m.support()[i]) - at0);
  return acc;
}

double free_norm(const Molecule& m) {
  if (m.size() == 0) return 0.0;
  std::vector<std::pair<double, double>> points;  // (position, mass)
  points.reserve(m.size() + 1);
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    points.emplace_back(m.support()[i], m.coeffs()[i]);
    total += m.coeffs()[i];
  }
  points.emplace_back(0.0, -total);  // balance at the base point
  std::sort(points.begin(), points.end());
  double norm = 0.0, cumulative = 0.0;
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    cumulative += points[j].second;
    norm += std::abs(cumulative) * (points[j + 1].first - points[j].first);
  }
  return norm;
}

double free_norm_oracle(const Molecule& m) {
  if (m.size() > 12)
    fail(ErrorCode::support_too_large, "oracle enumerates <= 12 support points");
  if (m.size() == 0) return 0.0;

  std::vector<double> pts = m.support();
  pts.push_back(0.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t gaps = pts.size() - 1;
  const std::size_t zero_at =
      static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), 0.0) -
                               pts.begin());

  double best = 0.0;
  for (std::size_t mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<double> ys(pts.size(), 0.0);
    for (std::size_t j = zero_at; j + 1 < pts.size(); ++j) {
      double slope = (mask >> j) & 1u ? 1.0 : -1.0;
      ys[j + 1] = ys[j] + slope * (pts[j + 1] - pts[j]);
    }
    for (std::size_t j = zero_at; j > 0; --j) {
      double slope = (mask >> (j - 1)) & 1u ? 1.0 : -1.0;
      ys[j - 1] = ys[j] - slope * (pts[j] - pts[j - 1]);
    }
    double left = gaps > 0 ? ((mask & 1u) ? 1.0 : -1.0) : 1.0;
    double right = gaps > 0 ? ((mask >> (gaps - 1)) & 1u ? 1.0 : -1.0) : 1.0;
    PwLinear candidate(pts, ys, left, right);
    best = std::max(best, pair(m, ScalarLip(candidate)));
  }
  return best;
}

MeasurableFn weak_probe(const LipField& field, const Molecule& m) {
  std::vector<double> values(field.size());
  for (std::size_t i = 0; i < field.size(); ++i)
    values[i] = pair(m, field.fn(i));
  return MeasurableFn(field.space(), std::move(values));
}

}  // namespace latlip
