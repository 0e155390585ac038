#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quiver/closedform.hpp"
#include "quiver/qip.hpp"

using namespace quiver;

TEST_CASE("rational arithmetic") {
  const Rational a(6, 4);
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(a + Rational(1, 2) == Rational(2));
  CHECK(a * Rational(2, 3) == Rational(1));
  CHECK(a / Rational(3) == Rational(1, 2));
  CHECK(a - Rational(3, 2) == Rational(0));
  CHECK(Rational(34, 5).floor() == 6);
  CHECK(Rational(34, 5).fractional_part() == Rational(4, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Rational(-1, 2).floor(), InvalidArgument);
}

TEST_CASE("n_tilde") {
  CHECK(n_tilde(DimensionVector{2, 2, 3, 3}) == 3);
  CHECK(n_tilde(DimensionVector{5, 5, 7, 8, 8, 9}) == 4);
  CHECK(n_tilde(DimensionVector{1, 1}) == 1);
  CHECK_THROWS_AS(n_tilde(DimensionVector{3, 1}), InvalidArgument);
}

TEST_CASE("closed_form") {
  SUBCASE("(2,3,2,3)") {
    const auto r = closed_form(DimensionVector{2, 3, 2, 3});
    CHECK(r.n_tilde == 3);
    CHECK(r.S == 10);
    CHECK(r.C == 4);
    CHECK(r.theta == 3);
  }
  SUBCASE("(5,5,6,6,6,6)") {
    const auto r = closed_form(DimensionVector{5, 5, 6, 6, 6, 6});
    CHECK(r.n_tilde == 5);
    CHECK(r.S == 34);
    CHECK(r.C == 19);
    CHECK(r.theta == 5);
    // The nearest-integer index is -1 here; S mod ñ = 4 gives the stated θ.
    CHECK(nearest_integer_theta_index(r.S, r.n_tilde) == -1);
  }
  SUBCASE("(1,1,1)") {
    const auto r = closed_form(DimensionVector{1, 1, 1});
    CHECK(r.C == 1);
    CHECK(r.theta == 2);
  }
  SUBCASE("(8,7,5,9,5,8)") {
    const auto r = closed_form(DimensionVector{8, 7, 5, 9, 5, 8});
    CHECK(r.C == 23);
    CHECK(r.theta == 4);
  }
  SUBCASE("(5,5,7,8,8,9)") {
    const auto r = closed_form(DimensionVector{5, 5, 7, 8, 8, 9});
    CHECK(r.C == 23);
    CHECK(r.theta == 4);
  }
}

TEST_CASE("closed form matches the sorted program on random d") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = oracle::random_dims(rng, 5, 7);
    const auto cf = closed_form(d);
    const auto s = solve_sorted(d);
    CHECK(cf.C == s.minimum);
    CHECK(cf.theta == static_cast<Wide>(s.count()));
    CHECK(cf.theta >= 1);

    // θ index readings agree whenever the nearest-integer one is non-negative.
    const Wide rho = cf.S % cf.n_tilde;
    const Wide nearest = nearest_integer_theta_index(cf.S, cf.n_tilde);
    CHECK((nearest == rho || nearest == rho - cf.n_tilde));
    if (nearest >= 0) CHECK(binomial(cf.n_tilde, nearest) == cf.theta);
    CHECK(binomial(cf.n_tilde, rho) == binomial(cf.n_tilde, cf.n_tilde - rho));

    std::vector<std::int64_t> shuffled(d.begin(), d.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto again = closed_form(DimensionVector(shuffled));
    CHECK(again.C == cf.C);
    CHECK(again.theta == cf.theta);

    const bool has_zero = d.min() == 0;
    CHECK((cf.C == 0) == has_zero);
    if (has_zero) CHECK(cf.theta == 1);
  }
}

TEST_CASE("larger inputs stay exact") {
  const auto r = closed_form(DimensionVector{1000, 2000, 1500, 3000, 1200});
  CHECK(r.C == solve_sorted(DimensionVector{1000, 2000, 1500, 3000, 1200}, {.prune = true}).minimum);
}
