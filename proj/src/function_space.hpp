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

#ifndef LATLIP_FUNCTION_SPACE_HPP
#define LATLIP_FUNCTION_SPACE_HPP

#include <cstddef>
#include <vector>

#include "measure_space.hpp"

namespace latlip {

// Norm selector for the function-space layer. The essential-sup case is a
// distinct state, never a float sentinel, so exponent arithmetic can not
// silently round through 1/inf.
struct SpaceSpec {
  static SpaceSpec lp(double p);
  static SpaceSpec linf();

  bool is_inf = false;
  double p = 2.0;  // meaningful only when !is_inf
};

// Measurable function over a discrete space, stored as one value per atom.
class MeasurableFn {
 public:
  MeasurableFn(SpacePtr space, std::vector<double> values);
  // All-zero function.
  explicit MeasurableFn(SpacePtr space);

  static MeasurableFn constant(SpacePtr space, double value);
  static MeasurableFn indicator(SpacePtr space,
                                const std::vector<std::size_t>& atoms);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

// Banach-function-space norm: (sum |f_i|^p mu_i)^(1/p), or max |f_i| for the
// essential sup (every atom has positive mass).
double bfs_norm(const SpaceSpec& spec, const MeasurableFn& f);

MeasurableFn abs(const MeasurableFn& f);
MeasurableFn pointwise_min(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn pointwise_max(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn pointwise_product(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn add(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn sub(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn scale(const MeasurableFn& f, double c);

// f * chi_A: zeroes every atom outside the subset.
MeasurableFn restrict(const MeasurableFn& f,
                      const std::vector<std::size_t>& atoms);

// Pointwise infimum of a non-empty family on a shared space.
MeasurableFn seq_inf(const std::vector<MeasurableFn>& fs);

double max_abs(const MeasurableFn& f);

}  // namespace latlip

#endif  // LATLIP_FUNCTION_SPACE_HPP
