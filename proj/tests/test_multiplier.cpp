#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "multiplier.hpp"

using namespace latlip;

TEST_CASE("derived exponent") {
  CHECK(MultiplierSpec::make(2.0, 1.0).r.p == doctest::Approx(2.0));
  CHECK(MultiplierSpec::make(3.0, 1.5).r.p == doctest::Approx(3.0));
  CHECK(MultiplierSpec::make(2.0, 2.0).r.is_inf);
  CHECK(MultiplierSpec::make(SpaceSpec::linf(), SpaceSpec::lp(2.0)).r.p ==
        doctest::Approx(2.0));
  try {
    MultiplierSpec::make(1.0, 2.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::exponent_order);
  }
}

TEST_CASE("mult_apply") {
  auto space = make_space({0.5, 0.5});
  MeasurableFn f(space, {1.0, 1.0});
  CHECK(mult_apply(MeasurableFn::constant(space, 1.0), f).values() == f.values());
  CHECK(mult_apply(MeasurableFn(space), f).values() ==
        std::vector<double>{0.0, 0.0});
  CHECK(mult_apply(MeasurableFn(space, {2.0, 3.0}), f).values() ==
        std::vector<double>{2.0, 3.0});
}

TEST_CASE("mult_norm closed forms") {
  auto halves = make_space({0.5, 0.5});
  CHECK(mult_norm(MeasurableFn(halves, {1.0, 2.0}), MultiplierSpec::make(2.0, 2.0)) ==
        2.0);
  CHECK(mult_norm(MeasurableFn::constant(unit_grid(4), 1.0),
                  MultiplierSpec::make(2.0, 1.0)) == doctest::Approx(1.0));
  // ||h||_2 = sqrt(0.5 + 4.5) = sqrt(5)
  CHECK(mult_norm(MeasurableFn(halves, {1.0, 3.0}), MultiplierSpec::make(2.0, 1.0)) ==
        doctest::Approx(2.23606797749979).epsilon(1e-12));
}

TEST_CASE("extremizer achieves the norm") {
  auto halves = make_space({0.5, 0.5});
  MultiplierSpec spec = MultiplierSpec::make(2.0, 1.0);

  MeasurableFn flat = extremizer(MeasurableFn::constant(halves, 2.0), spec);
  CHECK(flat[0] == doctest::Approx(flat[1]));
  CHECK(bfs_norm(spec.source, flat) == doctest::Approx(1.0));

  MeasurableFn masked = extremizer(MeasurableFn(halves, {1.0, 0.0}), spec);
  CHECK(masked[1] == 0.0);

  Rng rng(41);
  auto space = unit_grid(16);
  MultiplierSpec spec2 = MultiplierSpec::make(3.0, 1.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> values(space->size());
    for (double& v : values) v = rng.uniform(-2.0, 2.0);
    MeasurableFn h(space, values);
    MeasurableFn star = extremizer(h, spec2);
    CHECK(bfs_norm(spec2.source, star) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bfs_norm(spec2.target, mult_apply(h, star)) ==
          doctest::Approx(mult_norm(h, spec2)).epsilon(1e-10));
  }

  try {
    extremizer(MeasurableFn(halves), spec);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::zero_multiplier);
  }
  CHECK_THROWS_AS(extremizer(MeasurableFn(halves, {1.0, 1.0}),
                             MultiplierSpec::make(2.0, 2.0)),
                  Error);
}

TEST_CASE("oracle: single atom closed form, any exponent order") {
  auto space = make_space({0.3});
  MeasurableFn h(space, {2.0});
  for (auto [p, q] : {std::pair{2.0, 1.0}, {1.0, 2.0}, {3.0, 3.0}}) {
    double expected = 2.0 * std::pow(0.3, 1.0 / q - 1.0 / p);
    CHECK(mult_norm_oracle(h, p, q, 2) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(mult_norm_oracle(MeasurableFn(space), 2.0, 1.0, 2) == 0.0);
}

TEST_CASE("oracle meets the closed form") {
  Rng rng(42);
  auto space = unit_grid(32);
  for (double p : {1.5, 2.0, 3.0}) {
    for (double q : {1.0, 1.25}) {
      if (q >= p) continue;
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> values(space->size());
        for (double& v : values) v = rng.uniform(-2.0, 2.0);
        MeasurableFn h(space, values);
        double exact = mult_norm(h, MultiplierSpec::make(p, q));
        double oracle = mult_norm_oracle(h, p, q, 3, rng.next_u64());
        CHECK(oracle <= exact * (1.0 + 1e-9));
        CHECK(oracle >= exact - 1e-4);
      }
    }
  }
}

TEST_CASE("oracle is monotone in trials") {
  Rng rng(44);
  auto space = unit_grid(24);
  std::vector<double> values(space->size());
  for (double& v : values) v = rng.uniform(-2.0, 2.0);
  MeasurableFn h(space, values);
  double prev = 0.0;
  for (int trials : {1, 2, 4, 8}) {
    double value = mult_norm_oracle(h, 2.0, 1.0, trials, 123);
    CHECK(value >= prev);
    prev = value;
  }
}

TEST_CASE("homogeneity and domination") {
  Rng rng(43);
  auto space = unit_grid(8);
  MultiplierSpec spec = MultiplierSpec::make(3.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> big(space->size()), small(space->size());
    for (std::size_t i = 0; i < big.size(); ++i) {
      big[i] = rng.uniform(-3.0, 3.0);
      small[i] = big[i] * rng.uniform();
    }
    MeasurableFn h1(space, small), h2(space, big);
    CHECK(mult_norm(h1, spec) <= mult_norm(h2, spec) * (1.0 + 1e-12));

    double c = rng.uniform(-2.0, 2.0);
    CHECK(mult_norm(scale(h2, c), spec) ==
          doctest::Approx(std::abs(c) * mult_norm(h2, spec)).epsilon(1e-12));
  }
}
