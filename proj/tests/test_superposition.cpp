#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "common.hpp"
#include "superposition.hpp"

using namespace latlip;

namespace {

PwLinear random_pl(Rng& rng, int max_breaks, double lo = -2.0, double hi = 2.0,
                   double max_slope = 2.0) {
  int k = 2 + static_cast<int>(rng.index(static_cast<std::size_t>(max_breaks)));
  std::set<double> xs_set;
  while (static_cast<int>(xs_set.size()) < k) xs_set.insert(rng.uniform(lo, hi));
  std::vector<double> xs(xs_set.begin(), xs_set.end()), ys(xs.size());
  ys[0] = rng.uniform(-1.0, 1.0);
  for (std::size_t i = 1; i < xs.size(); ++i)
    ys[i] = ys[i - 1] + rng.uniform(-max_slope, max_slope) * (xs[i] - xs[i - 1]);
  return PwLinear(std::move(xs), std::move(ys), rng.uniform(-max_slope, max_slope),
                  rng.uniform(-max_slope, max_slope));
}

LipField random_field(Rng& rng, const SpacePtr& space) {
  std::vector<ScalarLip> fns;
  for (std::size_t i = 0; i < space->size(); ++i)
    fns.push_back(normalize_lip0(ScalarLip(random_pl(rng, 4))));
  return LipField(space, std::move(fns));
}

}  // namespace

TEST_CASE("apply") {
  auto space = unit_grid(4);
  // Constant shifted field: T(f) = 1/(1+|f|), so T(0) = chi.
  LipField shifted = LipField::constant(space, ScalarLip::inv_one_plus_abs());
  CHECK(shifted.affine_shifted());
  SuperOp op = SuperOp::from_field(shifted);
  MeasurableFn at_zero = op.apply(MeasurableFn(space));
  for (std::size_t i = 0; i < at_zero.size(); ++i) CHECK(at_zero[i] == 1.0);

  SuperOp id_op =
      SuperOp::from_field(LipField::constant(space, ScalarLip::identity()));
  MeasurableFn f(space, {0.5, -1.0, 2.0, 0.0});
  CHECK(id_op.apply(f).values() == f.values());

  // Simple field acts blockwise.
  SimpleField sf;
  sf.space = space;
  sf.blocks = {{{0, 1}, ScalarLip(PwLinear::scale_map(2.0))},
               {{2, 3}, ScalarLip(dist_set_fn({1}, 0.25))}};
  SuperOp block_op = SuperOp::from_field(sf.to_field());
  MeasurableFn out = block_op.apply(f);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == -2.0);
  CHECK(out[2] == dist_set_fn({1}, 0.25).eval(2.0));
  CHECK(out[3] == 0.0);
}

TEST_CASE("check_lattice_lipschitz") {
  auto space = unit_grid(4);
  SamplerConfig config;
  config.samples = 200;
  config.seed = 61;

  // Bounded contraction with constant bound 1.
  LipField shifted = LipField::constant(space, ScalarLip::inv_one_plus_abs());
  VerifyReport r1 = check_lattice_lipschitz(
      SuperOp::from_field(shifted), MeasurableFn::constant(space, 1.0), config, 1e-9);
  CHECK(r1.passed);
  CHECK(r1.samples_used == 200);
  CHECK_FALSE(r1.witness.has_value());

  Rng rng(62);
  LipField field = random_field(rng, space);
  SuperOp op = SuperOp::from_field(field);
  VerifyReport r2 =
      check_lattice_lipschitz(op, lip_profile(field), config, 1e-9);
  CHECK(r2.passed);
  CHECK(r2.worst_margin >= -1e-9);

  // Scaling the bound below the profile on a field with genuine slopes fails
  // with a witness: constant pairs hit every atom's slope.
  LipField steep(space, {ScalarLip(PwLinear::scale_map(1.0)),
                         ScalarLip(PwLinear::scale_map(2.0)),
                         ScalarLip(PwLinear::scale_map(1.5)),
                         ScalarLip(PwLinear::scale_map(3.0))});
  VerifyReport r3 = check_lattice_lipschitz(
      SuperOp::from_field(steep), scale(lip_profile(steep), 0.9), config, 1e-9);
  CHECK_FALSE(r3.passed);
  REQUIRE(r3.witness.has_value());
  CHECK(r3.worst_margin < -1e-9);
}

TEST_CASE("best_bound_estimate") {
  auto space = unit_grid(3);
  SuperOp id_op =
      SuperOp::from_field(LipField::constant(space, ScalarLip::identity()));
  MeasurableFn est = best_bound_estimate(id_op, {-1.0, 0.0, 1.0});
  CHECK(est.values() == std::vector<double>{1.0, 1.0, 1.0});

  // Grid through all breakpoints recovers the profile exactly.
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    LipField field = random_field(rng, space);
    SuperOp op = SuperOp::from_field(field);
    std::set<double> grid_set{0.0};
    for (std::size_t i = 0; i < field.size(); ++i)
      for (double x : field.fn(i).pl().breakpoints()) grid_set.insert(x);
    // Tail probes beyond every breakpoint expose the tail slopes.
    grid_set.insert(*grid_set.begin() - 1.0);
    grid_set.insert(*grid_set.rbegin() + 1.0);
    std::vector<double> grid(grid_set.begin(), grid_set.end());
    MeasurableFn estimate = best_bound_estimate(op, grid);
    MeasurableFn profile = lip_profile(field);
    for (std::size_t i = 0; i < profile.size(); ++i) {
      CHECK(estimate[i] <= profile[i] * (1.0 + 1e-12));
      CHECK(estimate[i] == doctest::Approx(profile[i]).epsilon(1e-12));
    }

    // Refinement is monotone toward the profile.
    MeasurableFn coarse = best_bound_estimate(op, {-2.0, 0.0, 2.0});
    for (std::size_t i = 0; i < profile.size(); ++i)
      CHECK(coarse[i] <= estimate[i] * (1.0 + 1e-12));
  }

  CHECK_THROWS_AS(best_bound_estimate(id_op, {1.0}), Error);
}

TEST_CASE("disjointness_check") {
  auto space = unit_grid(6);
  Rng rng(64);
  LipField field = random_field(rng, space);
  SuperOp op = SuperOp::from_field(field);
  MeasurableFn f(space, {1.0, -2.0, 0.5, 3.0, -1.0, 0.25});

  VerifyReport ok = disjointness_check(op, f, {0, 2, 4}, {1, 5}, 1e-9);
  CHECK(ok.passed);

  std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
  VerifyReport ident = disjointness_check(op, f, all, {}, 1e-9);
  CHECK(ident.passed);

  SuperOp shifting = SuperOp::opaque(
      space,
      [space](const MeasurableFn& g) {
        return add(g, MeasurableFn::constant(space, 1.0));
      },
      /*claims_zero_at_zero=*/false);
  try {
    disjointness_check(shifting, f, {0}, {1}, 1e-9);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::nonzero_at_zero);
  }
}

TEST_CASE("linear_diag_detect") {
  auto space = make_space({0.5, 0.5});
  DiagDecision diag = linear_diag_detect(space, {{2.0, 0.0}, {0.0, -1.0}});
  CHECK(diag.diagonal);
  CHECK(diag.h->values() == std::vector<double>{2.0, -1.0});

  DiagDecision ident = linear_diag_detect(space, {{1.0, 0.0}, {0.0, 1.0}});
  CHECK(ident.diagonal);
  CHECK(ident.h->values() == std::vector<double>{1.0, 1.0});

  DiagDecision off = linear_diag_detect(space, {{1.0, 1.0}, {0.0, 1.0}});
  CHECK_FALSE(off.diagonal);
  CHECK(off.witness_index == 1);  // e_1's image leaks onto atom 0

  // Accepted matrices act exactly like multiplication by h.
  Rng rng(65);
  auto grid = unit_grid(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<double>> rows(grid->size(),
                                          std::vector<double>(grid->size(), 0.0));
    for (std::size_t i = 0; i < grid->size(); ++i)
      rows[i][i] = rng.uniform(-3.0, 3.0);
    DiagDecision decision = linear_diag_detect(grid, rows);
    REQUIRE(decision.diagonal);
    std::vector<double> values(grid->size());
    for (double& v : values) v = rng.uniform(-2.0, 2.0);
    MeasurableFn f(grid, values);
    MeasurableFn via_matrix(grid);
    for (std::size_t i = 0; i < grid->size(); ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < grid->size(); ++j) acc += rows[i][j] * f[j];
      via_matrix[i] = acc;
    }
    CHECK(mult_apply(*decision.h, f).values() == via_matrix.values());
  }
}

TEST_CASE("recover_field") {
  auto space = unit_grid(3);
  SuperOp id_op =
      SuperOp::from_field(LipField::constant(space, ScalarLip::identity()));
  LipField rec = recover_field(id_op, {-1.0, 0.0, 1.0},
                               MeasurableFn::constant(space, 1.0));
  for (double v : {-1.0, -0.3, 0.0, 0.7, 1.0})
    CHECK(rec.eval(0, v) == doctest::Approx(v).epsilon(1e-15));

  // A field whose breakpoints all lie on the grid is recovered exactly on
  // the hull.
  Rng rng(66);
  LipField field(space, {normalize_lip0(ScalarLip(PwLinear(
                             {-1.0, 0.0, 1.0}, {0.5, 0.0, 2.0}, 1.0, 1.5))),
                         ScalarLip(PwLinear::scale_map(2.0)),
                         normalize_lip0(ScalarLip(PwLinear(
                             {-1.0, 1.0}, {1.0, 1.0}, -1.0, 0.5)))});
  SuperOp op = SuperOp::from_field(field);
  std::vector<double> grid{-2.0, -1.0, 0.0, 1.0, 2.0};
  LipField rec2 = recover_field(op, grid, lip_profile(field));
  for (int probe = 0; probe < 200; ++probe) {
    double v = rng.uniform(-2.0, 2.0);
    for (std::size_t w = 0; w < space->size(); ++w)
      CHECK(rec2.eval(w, v) == doctest::Approx(field.eval(w, v)).epsilon(1e-12));
  }

  // Probe reproduction is exact for every grid level (weak probe route).
  for (double lambda : grid) {
    MeasurableFn direct = op.apply(MeasurableFn::constant(space, lambda));
    MeasurableFn probed = weak_probe(rec2, Molecule::delta(lambda));
    CHECK(probed.values() == direct.values());
  }

  // Coarse grids: error on the hull bounded by Lip * spacing.
  for (double delta : {0.2, 0.1, 0.05}) {
    long long half = std::llround(2.0 / delta);
    std::vector<double> fine;
    for (long long k = -half; k <= half; ++k)
      fine.push_back(static_cast<double>(k) * delta);
    LipField rec3 = recover_field(op, fine, lip_profile(field));
    MeasurableFn profile = lip_profile(field);
    for (int probe = 0; probe < 100; ++probe) {
      double v = rng.uniform(-2.0, 2.0);
      for (std::size_t w = 0; w < space->size(); ++w)
        CHECK(std::abs(rec3.eval(w, v) - field.eval(w, v)) <=
              profile[w] * delta * (1.0 + 1e-9) + 1e-12);
    }
  }

  // Probes violating the declared bound are rejected.
  try {
    recover_field(op, grid, MeasurableFn::constant(space, 0.1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::incompatible_samples);
  }
  CHECK_THROWS_AS(
      recover_field(op, {-1.0, 1.0}, MeasurableFn::constant(space, 5.0)), Error);
}

TEST_CASE("tensor action") {
  auto space = unit_grid(4);
  MeasurableFn f(space, {0.5, -1.5, 2.0, 0.0});

  SimpleTensor single;
  single.terms.emplace_back(ScalarLip::identity(),
                            MeasurableFn::constant(space, 1.0));
  CHECK(tensor_apply(single, f).values() == f.values());

  SimpleTensor empty;
  CHECK(tensor_apply(empty, f).values() == std::vector<double>(4, 0.0));
  CHECK(tensor_canonicalize(empty, space).to_field().size() == 4);

  // Disjoint indicators act like the block field.
  SimpleTensor disjoint;
  disjoint.terms.emplace_back(ScalarLip(PwLinear::scale_map(2.0)),
                              MeasurableFn::indicator(space, {0, 1}));
  disjoint.terms.emplace_back(ScalarLip(dist_set_fn({1}, 0.25)),
                              MeasurableFn::indicator(space, {2, 3}));
  SimpleField canonical = tensor_canonicalize(disjoint, space);
  CHECK(canonical.blocks.size() == 2);
  SuperOp block_op = SuperOp::from_field(canonical.to_field());
  CHECK(tensor_apply(disjoint, f).values() == block_op.apply(f).values());

  // Overlapping indicators sum on the common cell.
  SimpleTensor overlap;
  overlap.terms.emplace_back(ScalarLip(PwLinear::scale_map(1.0)),
                             MeasurableFn::indicator(space, {0, 1}));
  overlap.terms.emplace_back(ScalarLip(PwLinear::scale_map(2.0)),
                             MeasurableFn::indicator(space, {0, 1}));
  LipField merged = tensor_canonicalize(overlap, space).to_field();
  CHECK(merged.eval(0, 1.0) == 3.0);
  CHECK(merged.eval(3, 1.0) == 0.0);

  SimpleTensor bad;
  bad.terms.emplace_back(ScalarLip::identity(), f);
  try {
    tensor_canonicalize(bad, space);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_indicator);
  }
}

TEST_CASE("tensor equals canonical field on random data") {
  Rng rng(67);
  auto space = unit_grid(10);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t blocks = 1 + rng.index(3);
    std::vector<std::vector<std::size_t>> cover(blocks);
    for (std::size_t i = 0; i < space->size(); ++i) {
      std::size_t pick = rng.index(blocks + 1);
      if (pick < blocks) cover[pick].push_back(i);
    }
    SimpleTensor tensor;
    for (auto& atoms : cover)
      tensor.terms.emplace_back(normalize_lip0(ScalarLip(random_pl(rng, 3))),
                                MeasurableFn::indicator(space, atoms));
    SuperOp op = SuperOp::from_field(tensor_canonicalize(tensor, space).to_field());
    std::vector<double> values(space->size());
    for (double& v : values) v = rng.uniform(-3.0, 3.0);
    MeasurableFn f(space, values);
    CHECK(tensor_apply(tensor, f).values() == op.apply(f).values());
  }
}

TEST_CASE("blockwise bound is tight blockwise") {
  auto space = unit_grid(4);
  SimpleField sf;
  sf.space = space;
  sf.blocks = {{{0, 1}, ScalarLip(PwLinear::scale_map(1.0))},
               {{2, 3}, ScalarLip(PwLinear::scale_map(2.0))}};
  LipField field = sf.to_field();
  SuperOp op = SuperOp::from_field(field);
  SamplerConfig config;
  config.samples = 200;
  config.seed = 68;

  CHECK(check_lattice_lipschitz(op, lip_profile(field), config, 1e-9).passed);

  // Shaving any single block's constant produces a witness in that block.
  for (const auto& [atoms, fn] : sf.blocks) {
    MeasurableFn reduced = lip_profile(field);
    for (std::size_t i : atoms) reduced[i] *= 0.95;
    VerifyReport report = check_lattice_lipschitz(op, reduced, config, 1e-9);
    CHECK_FALSE(report.passed);
    REQUIRE(report.witness.has_value());
    bool in_block = false;
    for (std::size_t i : atoms) in_block = in_block || report.witness->atom == i;
    CHECK(in_block);
  }
}

TEST_CASE("soundness: profile bound never violated on random fields") {
  Rng rng(69);
  auto space = unit_grid(5);
  SamplerConfig config;
  config.samples = 200;
  for (int trial = 0; trial < 50; ++trial) {
    LipField field = random_field(rng, space);
    config.seed = rng.next_u64();
    VerifyReport report = check_lattice_lipschitz(
        SuperOp::from_field(field), lip_profile(field), config, 1e-9);
    CHECK(report.passed);
  }
}

TEST_CASE("nonlipschitz ratios approach their level") {
  auto rows = nonlipschitz_demo({2, 3, 4, 5}, 2500);
  double prev = 0.0;
  for (const auto& row : rows) {
    CHECK(row.ratio == doctest::Approx(row.n).epsilon(0.05));
    CHECK(row.ratio > prev);
    prev = row.ratio;
  }
  try {
    nonlipschitz_demo({5}, 100);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::grid_too_coarse);
  }
}
