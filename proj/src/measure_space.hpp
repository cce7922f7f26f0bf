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

#ifndef LATLIP_MEASURE_SPACE_HPP
#define LATLIP_MEASURE_SPACE_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "common.hpp"

namespace latlip {

// Finite measure space with positively weighted atoms. Atoms carry real
// coordinates so that fields defined by formulas in the sample point can be
// evaluated directly; midpoint grids discretize Lebesgue measure on [0,1].
class DiscreteMeasureSpace {
 public:
  DiscreteMeasureSpace(std::vector<double> atoms, std::vector<double> weights);

  std::size_t size() const { return atoms_.size(); }
  double atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  double total_mass() const { return total_mass_; }

 private:
  std::vector<double> atoms_;
  std::vector<double> weights_;
  double total_mass_;
};

using SpacePtr = std::shared_ptr<const DiscreteMeasureSpace>;

// Atoms labeled 0..n-1 with the given weights.
SpacePtr make_space(const std::vector<double>& weights);

// n midpoint atoms (i - 1/2)/n on [0,1], each of mass 1/n. Midpoints keep
// formulas with a singularity at 0 finite and never hit dyadic rationals on
// power-of-two grids.
SpacePtr unit_grid(std::size_t n);

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b);

// Finite union of disjoint half-open intervals [a,b) in sorted order.
class IntervalSet {
 public:
  IntervalSet() = default;
  // Accepts intervals in any order; sorts and validates disjointness.
  explicit IntervalSet(std::vector<std::pair<double, double>> intervals);

  const std::vector<std::pair<double, double>>& intervals() const {
    return intervals_;
  }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

 private:
  std::vector<std::pair<double, double>> intervals_;
};

double interval_measure(const IntervalSet& s);
// Membership with the half-open convention: a <= w < b.
bool interval_contains(const IntervalSet& s, double w);

}  // namespace latlip

#endif  // LATLIP_MEASURE_SPACE_HPP
