#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "free_space.hpp"

using namespace latlip;

namespace {

Molecule random_molecule(Rng& rng, std::size_t max_support) {
  std::size_t size = 1 + rng.index(max_support);
  std::vector<double> support(size), coeffs(size);
  for (std::size_t i = 0; i < size; ++i) {
    support[i] = rng.uniform(-8.0, 8.0);
    coeffs[i] = rng.uniform(-2.0, 2.0);
  }
  return Molecule(std::move(support), std::move(coeffs));
}

}  // namespace

TEST_CASE("pairing") {
  CHECK(pair(Molecule::delta(1.0), ScalarLip::identity()) == 1.0);

  // <delta_2 - delta_1, f_{S={2}}> = 0 - 1/4
  Molecule m = add(Molecule::delta(2.0), scale(Molecule::delta(1.0), -1.0));
  CHECK(pair(m, ScalarLip(dist_set_fn({2}, 0.25))) == doctest::Approx(-0.25));

  Molecule zero({1.0, 2.0}, {0.0, 0.0});
  CHECK(zero.size() == 0);
  CHECK(pair(zero, ScalarLip::identity()) == 0.0);

  // Shifted functions pair through their normalized part.
  CHECK(pair(Molecule::delta(3.0), ScalarLip::inv_one_plus_abs()) ==
        doctest::Approx(0.25 - 1.0));
}

TEST_CASE("molecule normal form") {
  Molecule m({0.0, 1.0, 1.0, 2.0}, {5.0, 1.0, -1.0, 3.0});
  CHECK(m.size() == 1);  // base point dropped, duplicates merged, zeros pruned
  CHECK(m.support()[0] == 2.0);
  CHECK(m.coeffs()[0] == 3.0);
}

TEST_CASE("free_norm closed form") {
  CHECK(free_norm(Molecule::delta(3.5)) == doctest::Approx(3.5));
  CHECK(free_norm(Molecule::delta(-2.0)) == doctest::Approx(2.0));

  // 2 delta_1 + delta_{-1}: cumulative function has |F| = 1 on [-1,0) and
  // |F| = 2 on [0,1).
  Molecule m = add(scale(Molecule::delta(1.0), 2.0), Molecule::delta(-1.0));
  CHECK(free_norm(m) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(free_norm_oracle(m) == doctest::Approx(3.0).epsilon(1e-14));

  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    double x = rng.uniform(-10.0, 10.0), y = rng.uniform(-10.0, 10.0);
    Molecule pairm = add(Molecule::delta(x), scale(Molecule::delta(y), -1.0));
    CHECK(free_norm(pairm) == doctest::Approx(std::abs(x - y)).epsilon(1e-13));
  }
}

TEST_CASE("oracle equivalence") {
  CHECK(free_norm_oracle(Molecule::delta(1.0)) == doctest::Approx(1.0));
  Molecule diff = add(Molecule::delta(2.0), scale(Molecule::delta(1.0), -1.0));
  CHECK(free_norm_oracle(diff) == doctest::Approx(1.0));

  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    Molecule m = random_molecule(rng, 8);
    CHECK(free_norm(m) == doctest::Approx(free_norm_oracle(m)).epsilon(1e-12));
  }

  std::vector<double> big_support, big_coeffs;
  for (int i = 1; i <= 13; ++i) {
    big_support.push_back(static_cast<double>(i));
    big_coeffs.push_back(1.0);
  }
  try {
    free_norm_oracle(Molecule(big_support, big_coeffs));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::support_too_large);
  }
}

TEST_CASE("norm axioms and duality bound") {
  Rng rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    Molecule m = random_molecule(rng, 6);
    double c = rng.uniform(-3.0, 3.0);
    CHECK(free_norm(scale(m, c)) ==
          doctest::Approx(std::abs(c) * free_norm(m)).epsilon(1e-12));

    Molecule m2 = random_molecule(rng, 6);
    CHECK(free_norm(add(m, m2)) <= free_norm(m) + free_norm(m2) + 1e-10);

    // |<m, phi>| <= Lip(phi) * ||m||
    PwLinear phi = dist_set_fn(
        {1 + static_cast<int>(rng.index(10)), 12}, 0.25);
    CHECK(std::abs(pair(m, ScalarLip(phi))) <=
          phi.lip_const() * free_norm(m) + 1e-10);
  }
}

TEST_CASE("weak_probe") {
  auto space = make_space({0.5, 0.5});
  LipField constant = LipField::constant(space, ScalarLip::identity());
  Molecule m = Molecule::delta(2.0);
  MeasurableFn probe = weak_probe(constant, m);
  CHECK(probe.values() == std::vector<double>{2.0, 2.0});

  // delta_lambda probes the field pointwise: w -> field(w)(lambda).
  LipField mixed(space,
                 {ScalarLip::identity(), ScalarLip(dist_set_fn({2}, 0.25))});
  MeasurableFn at2 = weak_probe(mixed, Molecule::delta(2.0));
  CHECK(at2[0] == 2.0);
  CHECK(at2[1] == 0.0);

  // Linearity in the molecule.
  Rng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    Molecule a = random_molecule(rng, 4), b = random_molecule(rng, 4);
    MeasurableFn lhs = weak_probe(mixed, add(a, b));
    MeasurableFn rhs = add(weak_probe(mixed, a), weak_probe(mixed, b));
    for (std::size_t i = 0; i < lhs.size(); ++i)
      CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
  }
}
