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

#include "measure_space.hpp"

#include <algorithm>
#include <cmath>

namespace latlip {

DiscreteMeasureSpace::DiscreteMeasureSpace(std::vector<double> atoms,
                                           std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (weights_.empty()) fail(ErrorCode::empty_space, "no atoms");
  if (atoms_.size() != weights_.size())
    fail(ErrorCode::invalid_argument, "atom/weight length mismatch");
  // Kahan summation keeps total_mass within ~eps of the exact sum even for
  // millions of atoms.
  total_mass_ = 0.0;
  double compensation = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      fail(ErrorCode::nonpositive_weight, "weights must be strictly positive");
    double y = w - compensation;
    double t = total_mass_ + y;
    compensation = (t - total_mass_) - y;
    total_mass_ = t;
  }
}

SpacePtr make_space(const std::vector<double>& weights) {
  if (weights.empty()) fail(ErrorCode::empty_space, "no weights given");
  std::vector<double> atoms(weights.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i] = static_cast<double>(i);
  return std::make_shared<DiscreteMeasureSpace>(std::move(atoms), weights);
}

SpacePtr unit_grid(std::size_t n) {
  if (n == 0) fail(ErrorCode::empty_space, "unit_grid needs n >= 1");
  std::vector<double> atoms(n), weights(n, 1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    atoms[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return std::make_shared<DiscreteMeasureSpace>(std::move(atoms),
                                                std::move(weights));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->atoms() == b->atoms() && a->weights() == b->weights();
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b))
    fail(ErrorCode::space_mismatch, "operands live on different spaces");
}

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  for (const auto& [a, b] : intervals_) {
    if (!(a < b))
      fail(ErrorCode::invalid_argument, "interval needs a < b");
  }
  std::sort(intervals_.begin(), intervals_.end());
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].first < intervals_[i - 1].second)
      fail(ErrorCode::invalid_argument, "intervals overlap");
  }
}

double interval_measure(const IntervalSet& s) {
  double total = 0.0;
  for (const auto& [a, b] : s.intervals()) total += b - a;
  return total;
}

bool interval_contains(const IntervalSet& s, double w) {
  const auto& iv = s.intervals();
  auto it = std::upper_bound(
      iv.begin(), iv.end(), w,
      [](double x, const std::pair<double, double>& p) { return x < p.first; });
  if (it == iv.begin()) return false;
  --it;
  return w >= it->first && w < it->second;
}

}  // namespace latlip
