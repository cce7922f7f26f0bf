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

#include "superposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latlip {

SuperOp SuperOp::from_field(LipField field) {
  SpacePtr space = field.space();
  return SuperOp(std::move(space), std::move(field), nullptr, true);
}

SuperOp SuperOp::opaque(SpacePtr space, Evaluator evaluator,
                        bool claims_zero_at_zero) {
  if (!evaluator) fail(ErrorCode::invalid_argument, "null evaluator");
  return SuperOp(std::move(space), std::nullopt, std::move(evaluator),
                 claims_zero_at_zero);
}

const LipField& SuperOp::field() const {
  if (!field_) fail(ErrorCode::invalid_argument, "operator is not field-backed");
  return *field_;
}

MeasurableFn SuperOp::apply(const MeasurableFn& f) const {
  require_same_space(space_, f.space());
  if (field_) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = field_->eval(i, f[i]);
    return MeasurableFn(space_, std::move(out));
  }
  MeasurableFn out = evaluator_(f);
  require_same_space(space_, out.space());
  return out;
}

namespace {

std::pair<MeasurableFn, MeasurableFn> sample_pair(const SpacePtr& space,
                                                  Rng& rng, int family,
                                                  double amplitude) {
  const std::size_t n = space->size();
  auto constant_fn = [&] {
    return MeasurableFn::constant(space, rng.uniform(-amplitude, amplitude));
  };
  auto smooth_fn = [&] {
    double a = rng.uniform(-amplitude, amplitude);
    double b = rng.uniform(-amplitude, amplitude);
    double c = rng.uniform(-amplitude, amplitude);
    double lo = space->atom(0), hi = space->atom(n - 1);
    double span = hi > lo ? hi - lo : 1.0;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      double t = (space->atom(i) - lo) / span;
      v[i] = a + b * t + c * t * t;
    }
    return MeasurableFn(space, std::move(v));
  };
  auto spiky_fn = [&] {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-amplitude, amplitude);
    return MeasurableFn(space, std::move(v));
  };

  switch (family % 4) {
    case 0:
      return {constant_fn(), constant_fn()};
    case 1:
      return {smooth_fn(), smooth_fn()};
    case 2:
      return {spiky_fn(), spiky_fn()};
    default: {
      MeasurableFn f = smooth_fn(), g = spiky_fn();
      std::vector<std::size_t> mask;
      for (std::size_t i = 0; i < n; ++i)
        if (rng.coin()) mask.push_back(i);
      return {restrict(f, mask), restrict(g, mask)};
    }
  }
}

}  // namespace

VerifyReport check_lattice_lipschitz(const SuperOp& op, const MeasurableFn& k,
                                     const SamplerConfig& config, double tol) {
  require_same_space(op.space(), k.space());
  VerifyReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  Rng rng(config.seed);
  for (int s = 0; s < config.samples; ++s) {
    auto [f, g] = sample_pair(op.space(), rng, s, config.amplitude);
    MeasurableFn tf = op.apply(f), tg = op.apply(g);
    for (std::size_t i = 0; i < k.size(); ++i) {
      double margin = k[i] * std::abs(f[i] - g[i]) - std::abs(tf[i] - tg[i]);
      if (margin < report.worst_margin) {
        report.worst_margin = margin;
        if (margin < -tol) {
          report.passed = false;
          report.witness = Witness{f, g, i};
        }
      }
    }
    ++report.samples_used;
  }
  if (report.samples_used == 0) report.worst_margin = 0.0;
  if (report.passed) report.witness.reset();
  return report;
}

MeasurableFn best_bound_estimate(const SuperOp& op,
                                 const std::vector<double>& lambda_grid) {
  if (lambda_grid.size() < 2)
    fail(ErrorCode::degenerate_grid, "need at least two probe levels");
  std::vector<MeasurableFn> images;
  images.reserve(lambda_grid.size());
  for (double lambda : lambda_grid)
    images.push_back(op.apply(MeasurableFn::constant(op.space(), lambda)));

  const std::size_t n = op.space()->size();
  std::vector<double> est(n, 0.0);
  bool any_pair = false;
  for (std::size_t a = 0; a < lambda_grid.size(); ++a) {
    for (std::size_t b = a + 1; b < lambda_grid.size(); ++b) {
      double dl = std::abs(lambda_grid[a] - lambda_grid[b]);
      if (dl == 0.0) continue;
      any_pair = true;
      for (std::size_t i = 0; i < n; ++i) {
        double quot = std::abs(images[a][i] - images[b][i]) / dl;
        est[i] = std::max(est[i], quot);
      }
    }
  }
  if (!any_pair)
    fail(ErrorCode::degenerate_grid, "all probe levels coincide");
  return MeasurableFn(op.space(), std::move(est));
}

VerifyReport disjointness_check(const SuperOp& op, const MeasurableFn& f,
                                const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b, double tol,
                                const std::optional<MeasurableFn>& g_opt) {
  require_same_space(op.space(), f.space());
  for (std::size_t i : a)
    for (std::size_t j : b)
      if (i == j) fail(ErrorCode::invalid_argument, "subsets must be disjoint");

  MeasurableFn zero_image = op.apply(MeasurableFn(op.space()));
  if (max_abs(zero_image) > tol)
    fail(ErrorCode::nonzero_at_zero, "operator does not vanish at zero");

  const MeasurableFn& g = g_opt ? *g_opt : f;
  require_same_space(op.space(), g.space());

  VerifyReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  auto record = [&](const MeasurableFn& lhs, const MeasurableFn& rhs,
                    const MeasurableFn& wf, const MeasurableFn& wg) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      double margin = -std::abs(lhs[i] - rhs[i]);
      if (margin < report.worst_margin) {
        report.worst_margin = margin;
        if (margin < -tol) {
          report.passed = false;
          report.witness = Witness{wf, wg, i};
        }
      }
    }
    ++report.samples_used;
  };

  MeasurableFn fa = restrict(f, a), gb = restrict(g, b);
  record(op.apply(fa), restrict(op.apply(f), a), f, fa);
  record(op.apply(add(fa, gb)), add(op.apply(fa), op.apply(gb)), fa, gb);
  if (report.passed) report.witness.reset();
  return report;
}

DiagDecision linear_diag_detect(const SpacePtr& space,
                                const std::vector<std::vector<double>>& rows,
                                double tol) {
  const std::size_t n = space->size();
  if (rows.size() != n)
    fail(ErrorCode::invalid_argument, "matrix row count != atom count");
  for (const auto& row : rows)
    if (row.size() != n)
      fail(ErrorCode::invalid_argument, "matrix must be square over the atoms");

  DiagDecision decision;
  for (std::size_t j = 0; j < n; ++j) {
    // Image of the basis indicator e_j is column j; lattice domination by any
    // finite K forces it to vanish off atom j.
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j && std::abs(rows[i][j]) > tol) {
        decision.diagonal = false;
        decision.witness_index = j;
        decision.witness_value = rows[i][j];
        return decision;
      }
    }
  }
  decision.diagonal = true;
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += rows[i][j];
    h[i] = acc;  // = A(chi), the diagonal entry once off-diagonals vanish
  }
  decision.h = MeasurableFn(space, std::move(h));
  return decision;
}

LipField recover_field(const SuperOp& op, const std::vector<double>& lambda_grid,
                       const MeasurableFn& k, double zero_tol) {
  require_same_space(op.space(), k.space());
  if (lambda_grid.size() < 2)
    fail(ErrorCode::degenerate_grid, "need at least two probe levels");
  std::vector<double> grid = lambda_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (std::none_of(grid.begin(), grid.end(), [](double l) { return l == 0.0; }))
    fail(ErrorCode::invalid_argument, "probe grid must contain 0");

  std::vector<MeasurableFn> images;
  images.reserve(grid.size());
  for (double lambda : grid)
    images.push_back(op.apply(MeasurableFn::constant(op.space(), lambda)));

  const std::size_t zero_pos = static_cast<std::size_t>(
      std::lower_bound(grid.begin(), grid.end(), 0.0) - grid.begin());
  if (max_abs(images[zero_pos]) > zero_tol)
    fail(ErrorCode::nonzero_at_zero, "operator does not vanish at zero");

  const std::size_t n = op.space()->size();
  std::vector<ScalarLip> fns;
  std::vector<double> shifts(n, 0.0);
  fns.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    const double kw = k[w];
    std::vector<double> ys(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) ys[j] = images[j][w];
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      double dy = std::abs(ys[j + 1] - ys[j]);
      double dx = grid[j + 1] - grid[j];
      if (dy > kw * dx * (1.0 + 1e-9))
        fail(ErrorCode::incompatible_samples,
             "atom " + std::to_string(w) + ": probes at " +
                 std::to_string(grid[j]) + " and " + std::to_string(grid[j + 1]) +
                 " exceed the declared bound");
    }
    double shift = ys[zero_pos];
    shifts[w] = shift;
    for (double& y : ys) y -= shift;
    fns.push_back(ScalarLip(PwLinear(grid, std::move(ys), -kw, kw)));
  }
  return LipField(op.space(), std::move(fns), std::move(shifts));
}

MeasurableFn tensor_apply(const SimpleTensor& t, const MeasurableFn& f) {
  std::vector<double> out(f.size(), 0.0);
  for (const auto& [phi, h] : t.terms) {
    require_same_space(h.space(), f.space());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] += phi.eval(f[i]) * h[i];
  }
  return MeasurableFn(f.space(), std::move(out));
}

SimpleField tensor_canonicalize(const SimpleTensor& t, const SpacePtr& space) {
  const std::size_t n = space->size();
  for (const auto& [phi, h] : t.terms) {
    require_same_space(h.space(), space);
    for (std::size_t i = 0; i < n; ++i)
      if (h[i] != 0.0 && h[i] != 1.0)
        fail(ErrorCode::not_indicator,
             "tensor factor is not a 0/1 indicator function");
  }

  // Group atoms by the set of terms covering them; each signature is a cell
  // of the refined partition and carries the sum of its covering functions.
  std::vector<std::vector<bool>> signatures(n,
                                            std::vector<bool>(t.terms.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < t.terms.size(); ++j)
      signatures[i][j] = t.terms[j].second[i] == 1.0;

  SimpleField result;
  result.space = space;
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cell;
    for (std::size_t j = i; j < n; ++j) {
      if (!assigned[j] && signatures[j] == signatures[i]) {
        cell.push_back(j);
        assigned[j] = true;
      }
    }
    std::vector<std::size_t> covering;
    for (std::size_t j = 0; j < t.terms.size(); ++j)
      if (signatures[i][j]) covering.push_back(j);
    ScalarLip cell_fn = ScalarLip::constant(0.0);
    if (covering.size() == 1) {
      cell_fn = t.terms[covering[0]].first;
    } else if (!covering.empty()) {
      PwLinear acc = t.terms[covering[0]].first.pl();
      for (std::size_t c = 1; c < covering.size(); ++c)
        acc = pl_add(acc, t.terms[covering[c]].first.pl());
      cell_fn = ScalarLip(std::move(acc));
    }
    result.blocks.emplace_back(std::move(cell), std::move(cell_fn));
  }
  return result;
}

SuperOp make_inf_square_invsqrt(const SpacePtr& space) {
  return SuperOp::opaque(
      space,
      [space](const MeasurableFn& f) {
        std::vector<double> out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
          out[i] = std::min(f[i] * f[i], 1.0 / std::sqrt(space->atom(i)));
        return MeasurableFn(space, std::move(out));
      },
      /*claims_zero_at_zero=*/true);
}

std::vector<RatioRow> nonlipschitz_demo(const std::vector<int>& n_values,
                                        std::size_t grid_size) {
  if (n_values.empty()) fail(ErrorCode::empty_list, "no spike levels given");
  SpacePtr space = unit_grid(grid_size);
  SuperOp op = make_inf_square_invsqrt(space);
  const SpaceSpec l1 = SpaceSpec::lp(1.0);
  MeasurableFn zero_image = op.apply(MeasurableFn(space));

  std::vector<RatioRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    if (n < 1) fail(ErrorCode::invalid_argument, "spike level must be >= 1");
    double cut = 1.0 / (static_cast<double>(n) * n * n * n);
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < space->size(); ++i)
      if (space->atom(i) <= cut) inside.push_back(i);
    if (inside.empty())
      fail(ErrorCode::grid_too_coarse,
           "no atom below 1/n^4 for n = " + std::to_string(n) +
               "; use at least 4*n^4 atoms");
    MeasurableFn spike = restrict(
        MeasurableFn::constant(space, static_cast<double>(n)), inside);
    double numerator = bfs_norm(l1, sub(op.apply(spike), zero_image));
    double denominator = bfs_norm(l1, spike);
    rows.push_back({n, numerator / denominator});
  }
  return rows;
}

}  // namespace latlip
