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

#ifndef LATLIP_SUPERPOSITION_HPP
#define LATLIP_SUPERPOSITION_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "free_space.hpp"
#include "lip_field.hpp"

namespace latlip {

// Operator on measurable functions: either backed by a Lipschitz field and
// acting by pointwise composition T(f)(w) = field(w)(f(w)), or an opaque
// evaluator with declared metadata.
class SuperOp {
 public:
  using Evaluator = std::function<MeasurableFn(const MeasurableFn&)>;

  static SuperOp from_field(LipField field);
  static SuperOp opaque(SpacePtr space, Evaluator evaluator,
                        bool claims_zero_at_zero);

  MeasurableFn apply(const MeasurableFn& f) const;
  const SpacePtr& space() const { return space_; }
  bool is_field() const { return field_.has_value(); }
  const LipField& field() const;
  bool claims_zero_at_zero() const { return claims_zero_; }

 private:
  SuperOp(SpacePtr space, std::optional<LipField> field, Evaluator evaluator,
          bool claims_zero)
      : space_(std::move(space)),
        field_(std::move(field)),
        evaluator_(std::move(evaluator)),
        claims_zero_(claims_zero) {}

  SpacePtr space_;
  std::optional<LipField> field_;
  Evaluator evaluator_;
  bool claims_zero_;
};

struct Witness {
  MeasurableFn f;
  MeasurableFn g;
  std::size_t atom;
};

// Outcome of a pointwise-inequality check. worst_margin is the most negative
// slack of K|f-g| - |Tf-Tg| seen over all samples and atoms; a witness is
// attached exactly when some slack fell below -tol.
struct VerifyReport {
  bool passed = true;
  double worst_margin = 0.0;
  std::optional<Witness> witness;
  int samples_used = 0;
};

struct SamplerConfig {
  int samples = 200;
  std::uint64_t seed = 1;
  double amplitude = 3.0;
};

// Samples pairs (f,g) from four families (constants, smooth, independent
// per-atom noise, indicator-masked) and checks |Tf - Tg| <= K|f-g| + tol
// pointwise. Constant pairs realize the tightness witnesses, masked pairs
// exercise the disjointness structure.
VerifyReport check_lattice_lipschitz(const SuperOp& op, const MeasurableFn& k,
                                     const SamplerConfig& config, double tol);

// Per atom, the largest difference quotient |T(l1 chi) - T(l2 chi)|/|l1 - l2|
// over pairs from the grid; a lower bound for every valid bound function.
MeasurableFn best_bound_estimate(const SuperOp& op,
                                 const std::vector<double>& lambda_grid);

// Verifies T(f chi_A) = T(f) chi_A and T(f chi_A + g chi_B) = T(f chi_A) +
// T(g chi_B) for disjoint A, B, within tol. Requires T(0) = 0 within tol.
// When no g is supplied, g = f.
VerifyReport disjointness_check(const SuperOp& op, const MeasurableFn& f,
                                const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b, double tol,
                                const std::optional<MeasurableFn>& g = {});

// Decision for a linear operator given as a matrix over the atoms: diagonal
// action (with the defining function h = A(chi)) or a witness basis indicator
// whose image escapes its own atom.
struct DiagDecision {
  bool diagonal = false;
  std::optional<MeasurableFn> h;
  std::optional<std::size_t> witness_index;
  double witness_value = 0.0;
};

DiagDecision linear_diag_detect(const SpacePtr& space,
                                const std::vector<std::vector<double>>& rows,
                                double tol = 0.0);

// Rebuilds a field from constant-function probes: per atom, the piecewise
// linear interpolant through (lambda, T(lambda chi)(w)) on the grid hull,
// extended outside with slopes +-K(w) (the sup-convolution upper extension).
// The grid must contain 0 and T(0) must vanish within zero_tol.
LipField recover_field(const SuperOp& op, const std::vector<double>& lambda_grid,
                       const MeasurableFn& k, double zero_tol = 1e-9);

// Finite sum of elementary tensors (phi_i, h_i) acting by
// f -> sum_i phi_i(f(w)) h_i(w).
struct SimpleTensor {
  std::vector<std::pair<ScalarLip, MeasurableFn>> terms;
};

MeasurableFn tensor_apply(const SimpleTensor& t, const MeasurableFn& f);

// Requires every h_i to be a 0/1 indicator; refines the covers to a disjoint
// partition whose cell functions are the sums of the covering phi_i. The
// resulting field acts identically to the tensor.
SimpleField tensor_canonicalize(const SimpleTensor& t, const SpacePtr& space);

// The bounded-but-not-Lipschitz showcase operator f -> min(f^2, 1/sqrt(w)).
SuperOp make_inf_square_invsqrt(const SpacePtr& space);

struct RatioRow {
  int n;
  double ratio;  // ||T f_n - T 0||_1 / ||f_n||_1 with f_n = n chi_[0, n^-4]
};

// Difference-quotient blowup of the showcase operator along the spike family;
// the continuum value of the ratio is exactly n.
std::vector<RatioRow> nonlipschitz_demo(const std::vector<int>& n_values,
                                        std::size_t grid_size);

}  // namespace latlip

#endif  // LATLIP_SUPERPOSITION_HPP
