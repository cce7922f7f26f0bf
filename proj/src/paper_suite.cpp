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

#include "paper_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>

namespace latlip {

using nlohmann::json;

namespace {

PwLinear random_pl(Rng& rng, double lo, double hi, int max_breaks,
                   double max_slope) {
  int k = 2 + static_cast<int>(rng.index(static_cast<std::size_t>(max_breaks)));
  std::set<double> xs_set;
  while (static_cast<int>(xs_set.size()) < k)
    xs_set.insert(rng.uniform(lo, hi));
  std::vector<double> xs(xs_set.begin(), xs_set.end());
  std::vector<double> ys(xs.size());
  ys[0] = rng.uniform(-1.0, 1.0);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    double slope = rng.uniform(-max_slope, max_slope);
    ys[i] = ys[i - 1] + slope * (xs[i] - xs[i - 1]);
  }
  return PwLinear(std::move(xs), std::move(ys),
                  rng.uniform(-max_slope, max_slope),
                  rng.uniform(-max_slope, max_slope));
}

// Exact sup of |f - g| over [a, b] for piecewise-linear f, g: the maximum is
// attained at a hull endpoint or an interior breakpoint of either operand.
double sup_abs_diff(const PwLinear& f, const PwLinear& g, double a, double b) {
  double best = std::max(std::abs(f.eval(a) - g.eval(a)),
                         std::abs(f.eval(b) - g.eval(b)));
  auto visit = [&](const std::vector<double>& xs) {
    for (double x : xs)
      if (x > a && x < b)
        best = std::max(best, std::abs(f.eval(x) - g.eval(x)));
  };
  visit(f.breakpoints());
  visit(g.breakpoints());
  return best;
}

std::set<int> random_subset(Rng& rng, int lo, int hi) {
  std::set<int> out;
  for (int v = lo; v <= hi; ++v)
    if (rng.coin()) out.insert(v);
  return out;
}

struct CsvSink {
  std::string dir;

  void write(const std::string& name, const std::string& header,
             const std::vector<std::vector<double>>& rows) const {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / name);
    out << header << "\n";
    out.precision(17);
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
  }
};

// ---------------------------------------------------------------------------
// Anchor 1: multiplier norm identity and the extremal function.

json anchor_multiplier_identity(Rng rng) {
  SpacePtr space = unit_grid(64);
  const std::vector<std::pair<double, double>> exponents{{2, 1}, {3, 1.5}, {2, 2}};
  double worst_oracle_gap = 0.0, worst_extremal_gap = 0.0;
  bool passed = true;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> values(space->size());
    for (double& v : values) v = rng.uniform(-2.0, 2.0);
    MeasurableFn h(space, std::move(values));
    for (auto [p, q] : exponents) {
      MultiplierSpec spec = MultiplierSpec::make(p, q);
      double exact = mult_norm(h, spec);
      double oracle = mult_norm_oracle(h, p, q, 3, rng.next_u64());
      worst_oracle_gap = std::max(worst_oracle_gap, std::abs(exact - oracle));
      if (std::abs(exact - oracle) > 1e-4) passed = false;
      if (q < p) {
        MeasurableFn star = extremizer(h, spec);
        double achieved = bfs_norm(spec.target, mult_apply(h, star));
        worst_extremal_gap =
            std::max(worst_extremal_gap, std::abs(achieved - exact));
        if (std::abs(achieved - exact) > 1e-10) passed = false;
      }
    }
  }
  return json{{"name", "multiplier-identity"},
              {"passed", passed},
              {"samples", 100},
              {"worst_oracle_gap", worst_oracle_gap},
              {"worst_extremal_gap", worst_extremal_gap}};
}

// ---------------------------------------------------------------------------
// Anchor 2: the free-space isometry and the closed-form norm vs brute force.

json anchor_free_isometry(Rng rng) {
  bool passed = true;
  double worst_iso = 0.0, worst_oracle = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    double x = rng.uniform(-10.0, 10.0), y = rng.uniform(-10.0, 10.0);
    if (x == 0.0 || y == 0.0 || x == y) continue;
    Molecule m = add(Molecule::delta(x), scale(Molecule::delta(y), -1.0));
    double gap = std::abs(free_norm(m) - std::abs(x - y));
    worst_iso = std::max(worst_iso, gap);
    if (gap > 1e-12) passed = false;
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t size = 1 + rng.index(8);
    std::vector<double> support, coeffs;
    for (std::size_t i = 0; i < size; ++i) {
      support.push_back(rng.uniform(-8.0, 8.0));
      coeffs.push_back(rng.uniform(-2.0, 2.0));
    }
    Molecule m(std::move(support), std::move(coeffs));
    double gap = std::abs(free_norm(m) - free_norm_oracle(m));
    worst_oracle = std::max(worst_oracle, gap);
    if (gap > 1e-12) passed = false;
  }
  return json{{"name", "free-isometry"},
              {"passed", passed},
              {"worst_isometry_gap", worst_iso},
              {"worst_oracle_gap", worst_oracle}};
}

// ---------------------------------------------------------------------------
// Anchor 3: the separated family f_S: unit Lipschitz distance and 1/4
// uniform separation for distinct index sets.

json anchor_separation_family(Rng rng) {
  bool passed = true;
  double min_sup = std::numeric_limits<double>::infinity();
  int checked = 0;
  while (checked < 100) {
    std::set<int> s = random_subset(rng, 1, 20);
    std::set<int> d = random_subset(rng, 1, 20);
    if (s == d) continue;
    ++checked;
    PwLinear fs = dist_set_fn(s, 0.25), fd = dist_set_fn(d, 0.25);
    PwLinear diff = pl_sub(fs, fd);
    if (diff.lip_const() != 1.0) passed = false;
    double sup = 0.0;
    for (std::size_t i = 0; i < diff.size(); ++i)
      sup = std::max(sup, std::abs(diff.values()[i]));
    min_sup = std::min(min_sup, sup);
    if (sup < 0.25 - 1e-12) passed = false;
  }
  return json{{"name", "remark-3.6"},
              {"passed", passed},
              {"pairs", checked},
              {"min_sup_separation", min_sup}};
}

// ---------------------------------------------------------------------------
// Anchor 4: dyadic preimage formula against direct digit evaluation.

json anchor_dyadic_preimage(Rng rng) {
  const int depth = 30;
  bool passed = true;
  long long mismatches = 0;
  for (double lambda : {1.0, 2.05, 3.3}) {
    for (double s : {0.05, 0.1, 0.2}) {
      IntervalSet preimage = dyadic_preimage(lambda, s, depth);
      for (int k = 0; k < 10000; ++k) {
        double w = rng.uniform();
        auto digits = binary_digits(w, depth);
        double phi = 0.5;
        for (int i = 1; i <= depth; ++i)
          if (digits[static_cast<std::size_t>(i - 1)] == 0)
            phi = std::min(phi, std::abs(lambda - static_cast<double>(i)));
        bool direct = phi < s;
        if (direct != interval_contains(preimage, w)) ++mismatches;
      }
    }
  }
  if (mismatches != 0) passed = false;
  return json{{"name", "dyadic-preimage"},
              {"passed", passed},
              {"samples_per_case", 10000},
              {"mismatches", mismatches}};
}

// ---------------------------------------------------------------------------
// Anchor 5: ratio blowup of f -> min(f^2, 1/sqrt(w)) along the spike family,
// with the pointwise bound 2/sqrt(w) still verified.

json anchor_nonlipschitz(Rng rng, const CsvSink& csv) {
  const std::vector<int> levels{2, 3, 4, 5};
  const std::size_t grid_size = 4 * 5 * 5 * 5 * 5;
  auto rows = nonlipschitz_demo(levels, grid_size);
  bool passed = true;
  double prev = -1.0;
  json table = json::array();
  std::vector<std::vector<double>> csv_rows;
  for (const auto& row : rows) {
    table.push_back({row.n, row.ratio});
    csv_rows.push_back({static_cast<double>(row.n), row.ratio});
    if (std::abs(row.ratio - row.n) > 0.05 * row.n) passed = false;
    if (row.ratio <= prev) passed = false;
    prev = row.ratio;
  }
  csv.write("nonlipschitz_ratios.csv", "n,ratio", csv_rows);

  SpacePtr space = unit_grid(grid_size);
  SuperOp op = make_inf_square_invsqrt(space);
  std::vector<double> bound(space->size());
  for (std::size_t i = 0; i < bound.size(); ++i)
    bound[i] = 2.0 / std::sqrt(space->atom(i));
  SamplerConfig config;
  config.samples = 200;
  config.seed = rng.next_u64();
  VerifyReport verify = check_lattice_lipschitz(
      op, MeasurableFn(space, std::move(bound)), config, 1e-9);
  if (!verify.passed) passed = false;
  return json{{"name", "nonlipschitz-ratio"},
              {"passed", passed},
              {"grid_size", grid_size},
              {"ratios", table},
              {"bound_check_margin", verify.worst_margin}};
}

// ---------------------------------------------------------------------------
// Anchor 6: diagonal detection for linear operators over the atoms.

json anchor_diagonal_detect(Rng rng) {
  SpacePtr space = unit_grid(16);
  const std::size_t n = space->size();
  bool passed = true;
  int misclassified = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = rng.uniform(-3.0, 3.0);
    DiagDecision decision = linear_diag_detect(space, rows);
    if (!decision.diagonal) {
      ++misclassified;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i)
      if ((*decision.h)[i] != rows[i][i]) passed = false;
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = rng.uniform(-3.0, 3.0);
    std::size_t i = rng.index(n), j = rng.index(n);
    while (j == i) j = rng.index(n);
    rows[i][j] = rng.sign() * (1e-6 + rng.uniform());
    DiagDecision decision = linear_diag_detect(space, rows);
    if (decision.diagonal || decision.witness_index != j) ++misclassified;
  }
  if (misclassified != 0) passed = false;
  return json{{"name", "diagonal-detect"},
              {"passed", passed},
              {"misclassified", misclassified}};
}

// ---------------------------------------------------------------------------
// Anchor 7: field recovery from constant probes; hull error <= Lip * delta
// and exact reproduction at the probe levels.

json anchor_field_recovery(Rng rng, const CsvSink& csv) {
  SpacePtr space = unit_grid(8);
  const std::vector<double> deltas{0.2, 0.1, 0.05};
  bool passed = true;
  double worst_ratio = 0.0;
  std::vector<std::vector<double>> csv_rows;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ScalarLip> fns;
    for (std::size_t i = 0; i < space->size(); ++i) {
      PwLinear pl = random_pl(rng, -1.8, 1.8, 4, 2.0);
      // Normalized field: the probe at 0 must vanish.
      fns.push_back(normalize_lip0(ScalarLip(std::move(pl))));
    }
    LipField field(space, std::move(fns));
    SuperOp op = SuperOp::from_field(field);
    MeasurableFn profile = lip_profile(field);
    for (double delta : deltas) {
      long long half = std::llround(2.0 / delta);
      std::vector<double> grid;
      for (long long k = -half; k <= half; ++k)
        grid.push_back(static_cast<double>(k) * delta);
      LipField recovered = recover_field(op, grid, profile, 0.0);
      double delta_worst = 0.0;
      for (std::size_t w = 0; w < space->size(); ++w) {
        for (double lambda : grid) {
          double err = std::abs(recovered.eval(w, lambda) - field.eval(w, lambda));
          if (err != 0.0) passed = false;
        }
        double sup = sup_abs_diff(recovered.fn(w).pl(), field.fn(w).pl(),
                                  grid.front(), grid.back());
        double budget = profile[w] * delta;
        delta_worst = std::max(delta_worst, sup);
        if (sup > budget * (1.0 + 1e-9)) passed = false;
        if (budget > 0.0) worst_ratio = std::max(worst_ratio, sup / budget);
      }
      csv_rows.push_back({delta, delta_worst});
    }
  }
  csv.write("recovery_error.csv", "delta,sup_error", csv_rows);
  return json{{"name", "field-recovery"},
              {"passed", passed},
              {"fields", 20},
              {"worst_error_over_budget", worst_ratio}};
}

// ---------------------------------------------------------------------------
// Anchor 8: truncation of a field along an approximating sequence; profiles
// are exact pointwise minima and the running-infimum norms climb back.

json anchor_truncation(Rng rng) {
  SpacePtr space = unit_grid(6);
  const SpaceSpec l2 = SpaceSpec::lp(2.0);
  bool passed = true;
  double worst_gap = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ScalarLip> fns;
    for (std::size_t i = 0; i < space->size(); ++i)
      fns.push_back(normalize_lip0(ScalarLip(random_pl(rng, -2.0, 2.0, 4, 2.0))));
    LipField field(space, std::move(fns));
    MeasurableFn profile = lip_profile(field);
    double target = kb_norm(field, l2);
    double sll_target = sll_norm(field, 2.0, 1.0);

    std::vector<MeasurableFn> truncated_profiles;
    PwLinear wiggle = random_pl(rng, -2.0, 2.0, 3, 1.0);
    for (int k = 1; k <= 35; ++k) {
      double eps = std::ldexp(1.0, -k);
      std::vector<ScalarLip> approx_fns;
      for (std::size_t i = 0; i < space->size(); ++i)
        approx_fns.push_back(normalize_lip0(
            ScalarLip(pl_add(field.fn(i).pl(), pl_scale(wiggle, eps)))));
      LipField approx(space, std::move(approx_fns));
      LipField truncated = truncate_field(field, approx);
      MeasurableFn tp = lip_profile(truncated);
      MeasurableFn expected = pointwise_min(profile, lip_profile(approx));
      for (std::size_t i = 0; i < tp.size(); ++i)
        if (tp[i] != expected[i]) passed = false;
      if (sll_norm(truncated, 2.0, 1.0) > sll_target * (1.0 + 1e-12))
        passed = false;
      truncated_profiles.push_back(tp);
    }

    double prev_norm = -1.0;
    double sup_norm = 0.0;
    for (std::size_t n = 0; n < truncated_profiles.size(); ++n) {
      std::vector<MeasurableFn> tail(truncated_profiles.begin() +
                                         static_cast<std::ptrdiff_t>(n),
                                     truncated_profiles.end());
      double norm = bfs_norm(l2, seq_inf(tail));
      if (norm < prev_norm - 1e-12) passed = false;
      prev_norm = norm;
      sup_norm = std::max(sup_norm, norm);
    }
    worst_gap = std::max(worst_gap, std::abs(sup_norm - target));
    if (std::abs(sup_norm - target) > 1e-9) passed = false;
  }
  return json{{"name", "truncation-limit"},
              {"passed", passed},
              {"sequences", 20},
              {"worst_norm_gap", worst_gap}};
}

// ---------------------------------------------------------------------------
// Anchor 9: tensors with disjoint indicator factors act exactly like their
// canonical fields, and the operator norm matches the profile norm.

json anchor_tensor_identity(Rng rng) {
  SpacePtr space = unit_grid(12);
  const std::size_t n = space->size();
  bool passed = true;
  double worst_norm_gap = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t blocks = 1 + rng.index(4);
    std::vector<std::vector<std::size_t>> cover(blocks);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t pick = rng.index(blocks + 1);  // blocks -> uncovered
      if (pick < blocks) cover[pick].push_back(i);
    }
    SimpleTensor tensor;
    for (std::size_t b = 0; b < blocks; ++b)
      tensor.terms.emplace_back(
          normalize_lip0(ScalarLip(random_pl(rng, -2.0, 2.0, 3, 2.0))),
          MeasurableFn::indicator(space, cover[b]));
    SimpleField canonical = tensor_canonicalize(tensor, space);
    LipField field = canonical.to_field();
    SuperOp op = SuperOp::from_field(field);

    std::vector<double> values(n);
    for (double& v : values) v = rng.uniform(-3.0, 3.0);
    MeasurableFn f(space, std::move(values));
    MeasurableFn lhs = tensor_apply(tensor, f), rhs = op.apply(f);
    for (std::size_t i = 0; i < n; ++i)
      if (lhs[i] != rhs[i]) passed = false;

    MultiplierSpec spec = MultiplierSpec::make(2.0, 1.0);
    double sll = sll_norm(field, spec);
    MeasurableFn profile = lip_profile(field);
    double direct = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      direct += std::pow(std::abs(profile[i]), spec.r.p) * space->weight(i);
    direct = std::pow(direct, 1.0 / spec.r.p);
    worst_norm_gap = std::max(worst_norm_gap, std::abs(sll - direct));
    if (std::abs(sll - direct) > 1e-12) passed = false;
  }
  return json{{"name", "tensor-identity"},
              {"passed", passed},
              {"tensors", 1000},
              {"worst_norm_gap", worst_norm_gap}};
}

}  // namespace

std::vector<std::string> paper_suite_anchor_names() {
  return {"multiplier-identity", "free-isometry",   "remark-3.6",
          "dyadic-preimage",     "nonlipschitz-ratio", "diagonal-detect",
          "field-recovery",      "truncation-limit", "tensor-identity"};
}

RunResult paper_suite(const PaperSuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;

  std::string seed_source;
  std::uint64_t seed = effective_seed(options.seed, &seed_source);
  CsvSink csv{options.csv_dir};

  const auto names = paper_suite_anchor_names();
  if (!options.only.empty() &&
      std::find(names.begin(), names.end(), options.only) == names.end()) {
    result.status = RunStatus::config_error;
    result.error = "unknown anchor '" + options.only + "'";
    result.report = json{{"$schema", "latlip-report/v1"}, {"error", result.error}};
    return result;
  }

  json anchors = json::array();
  bool all_passed = true;
  std::uint64_t seed_state = seed;
  for (std::size_t idx = 0; idx < names.size(); ++idx) {
    std::uint64_t anchor_seed = splitmix64(seed_state);
    if (!options.only.empty() && names[idx] != options.only) continue;
    Rng rng(anchor_seed);
    json entry;
    const std::string& name = names[idx];
    if (name == "multiplier-identity") entry = anchor_multiplier_identity(rng);
    else if (name == "free-isometry") entry = anchor_free_isometry(rng);
    else if (name == "remark-3.6") entry = anchor_separation_family(rng);
    else if (name == "dyadic-preimage") entry = anchor_dyadic_preimage(rng);
    else if (name == "nonlipschitz-ratio") entry = anchor_nonlipschitz(rng, csv);
    else if (name == "diagonal-detect") entry = anchor_diagonal_detect(rng);
    else if (name == "field-recovery") entry = anchor_field_recovery(rng, csv);
    else if (name == "truncation-limit") entry = anchor_truncation(rng);
    else entry = anchor_tensor_identity(rng);
    entry["seed"] = anchor_seed;
    if (!entry.value("passed", false)) all_passed = false;
    anchors.push_back(std::move(entry));
  }

  json report;
  report["$schema"] = "latlip-report/v1";
  report["suite"] = "paper";
  report["provenance"] = {{"tool", "latlip"},
                          {"version", kVersion},
                          {"seed", seed},
                          {"seed_source", seed_source}};
  report["anchors"] = std::move(anchors);
  report["passed"] = all_passed;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["timing"] = {
      {"total_ms",
       std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed)
           .count()}};

  result.report = std::move(report);
  result.status = all_passed ? RunStatus::ok : RunStatus::violation;
  return result;
}

}  // namespace latlip
