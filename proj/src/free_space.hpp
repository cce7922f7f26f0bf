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

#ifndef LATLIP_FREE_SPACE_HPP
#define LATLIP_FREE_SPACE_HPP

#include <vector>

#include "lip_field.hpp"
#include "piecewise_linear.hpp"

namespace latlip {

// Finitely supported element sum a_i * delta_{x_i} of the free space over the
// line with base point 0. The evaluation at the base point is the zero
// functional, so mentions of 0 are dropped; duplicate support points merge
// and zero coefficients are pruned.
class Molecule {
 public:
  Molecule() = default;
  Molecule(std::vector<double> support, std::vector<double> coeffs);

  static Molecule delta(double x) { return Molecule({x}, {1.0}); }

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<double> support_;  // sorted, distinct, nonzero
  std::vector<double> coeffs_;
};

Molecule add(const Molecule& a, const Molecule& b);
Molecule scale(const Molecule& m, double c);

// <m, phi> = sum a_i (phi(x_i) - phi(0)); phi enters through its normalized
// representative, so shifts do not contribute.
double pair(const Molecule& m, const ScalarLip& phi);

// Dual norm against the unit ball of the Lipschitz-constant norm, computed
// in closed form as the integral of |F| where F is the cumulative function
// of the balanced measure m - (sum a_i) delta_0.
double free_norm(const Molecule& m);

// Brute force over all +-1 slope patterns on the gaps of sorted({0} u
// support): builds each piecewise-linear candidate and maximizes the pairing.
// Guards the closed form; support limited to 12 points.
double free_norm_oracle(const Molecule& m);

// w -> <m, field(w)>: scalarization of the field by a free-space element.
MeasurableFn weak_probe(const LipField& field, const Molecule& m);

}  // namespace latlip

#endif  // LATLIP_FREE_SPACE_HPP
