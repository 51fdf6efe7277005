#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sv/gap.hpp"

using sv::calabi_constants;
using sv::calabi_constants_exact;
using sv::critical_point;
using sv::gap_function;
using sv::gap_function_exact;
using sv::Rational;
using sv::theorem_bound;

TEST_CASE("curvature constants per degree") {
  const auto [k1, s1] = calabi_constants(1);
  CHECK(k1 == 1.0);
  CHECK(s1 == 0.0);
  const auto [k3, s3] = calabi_constants(3);
  CHECK(k3 == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(s3 == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(calabi_constants_exact(3).S == Rational(5, 3));
  CHECK(calabi_constants_exact(2).S == Rational(4, 3));
  const auto c10 = calabi_constants_exact(10);
  CHECK(c10.K == Rational(1, 55));
  CHECK(c10.S == Rational(108, 55));
  CHECK(Rational(2) * c10.K + c10.S == Rational(2));
  CHECK_THROWS_AS(calabi_constants(0), std::invalid_argument);
}

TEST_CASE("gap function endpoints vanish exactly in rational arithmetic") {
  CHECK(gap_function_exact(Rational(5, 3)).is_zero());
  CHECK(gap_function_exact(Rational(9, 5)).is_zero());
  // The discriminant reduces to a perfect square at both ends:
  // F(5/3) = 56^2 and F(9/5) = (356/5)^2.
  const Rational F53 =
      (Rational(134) - Rational(114) * Rational(5, 3)).pow(2);
  CHECK(F53 == Rational(3136));
  CHECK(F53.sqrt_exact() == Rational(56));
  const Rational b95 = Rational(134) - Rational(114) * Rational(9, 5);
  CHECK(b95 * b95 == Rational(126736, 25));
  CHECK((b95 * b95).sqrt_exact() == Rational(356, 5));
}

TEST_CASE("gap function values and derivative") {
  CHECK(gap_function(5.0 / 3.0).f == doctest::Approx(0.0).scale(1.0));
  CHECK(gap_function(9.0 / 5.0).f ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  CHECK(gap_function(1.72935007).f ==
        doctest::Approx(0.00419291).scale(1.0).epsilon(1e-7));
  CHECK_THROWS_AS(gap_function(1.0), std::domain_error);
  CHECK_THROWS_AS(gap_function(1.9), std::domain_error);

  // Central finite difference of f validates the closed-form derivative.
  for (double x : {1.68, 1.70, 1.729, 1.75, 1.78}) {
    const double h = 1e-6;
    const double fd = (gap_function(x + h).f - gap_function(x - h).f) / (2 * h);
    CHECK(gap_function(x).f_prime ==
          doctest::Approx(fd).scale(1.0).epsilon(1e-8));
  }
}

TEST_CASE("gap function is nonnegative with one interior maximum") {
  const auto cp = critical_point();
  int sign_changes = 0;
  double prev = gap_function(5.0 / 3.0 + 1e-9).f_prime;
  for (int k = 1; k <= 1000; ++k) {
    const double x = 5.0 / 3.0 + (9.0 / 5.0 - 5.0 / 3.0) * k / 1000.5;
    const auto g = gap_function(x);
    CHECK(g.f >= -1e-15);
    CHECK(g.F >= 0.0);
    if ((g.f_prime > 0) != (prev > 0)) ++sign_changes;
    if (x < cp.s_star) CHECK(g.f_prime > 0);
    if (x > cp.s_star + 1e-9) CHECK(g.f_prime < 0);
    prev = g.f_prime;
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("critical point and forbidden interval") {
  const auto cp = critical_point();
  CHECK(cp.s_star == doctest::Approx(1.72935007).scale(1.0).epsilon(1e-8));
  CHECK(cp.f_max == doctest::Approx(0.00419291).scale(1.0).epsilon(1e-7));
  CHECK(cp.forbidden_lo_str == "1.72936");
  CHECK(cp.forbidden_hi_str == "1.73355");
  CHECK(cp.forbidden_lo > cp.s_star);
  CHECK(cp.forbidden_hi > cp.forbidden_lo);
  // Soundness: for every S_min at or beyond lo, the excluded reach covers hi.
  for (double x = cp.forbidden_lo; x <= cp.forbidden_hi; x += 1e-4)
    CHECK(x + gap_function(x).f >= cp.forbidden_hi);
}

TEST_CASE("exclusion bound") {
  CHECK_FALSE(theorem_bound(5.0 / 3.0, 5.0 / 3.0));
  CHECK_FALSE(theorem_bound(9.0 / 5.0, 9.0 / 5.0));
  CHECK(theorem_bound(1.7294, 1.7300));
  CHECK_THROWS_AS(theorem_bound(1.75, 1.70), std::invalid_argument);
  CHECK_THROWS_AS(theorem_bound(1.0, 1.7), std::domain_error);
}
