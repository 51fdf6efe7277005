#include <cstdint>

#include <stdexcept>

#include "doctest.h"
#include "sv/algebra.hpp"
#include "sv/bigint.hpp"
#include "sv/rational.hpp"
#include "sv/rational_poly.hpp"

using sv::BigInt;
using sv::Rational;
using sv::RationalPoly;

TEST_CASE("bigint arithmetic round-trips through strings") {
  const BigInt a = BigInt::from_string("123456789012345678901234567890");
  const BigInt b = BigInt::from_string("-987654321098765432109");
  CHECK((a * b).to_string() ==
        "-121932631137021795226076817523485749121223746380010");
  CHECK((a + b).to_string() == "123456788024691357802469135781");
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  CHECK(q * b + r == a);
  CHECK(BigInt::gcd(BigInt(360), BigInt(-84)) == BigInt(12));
}

TEST_CASE("bigint integer square roots") {
  const BigInt n = BigInt::from_string("12345678901234567890");
  const BigInt s = (n * n).isqrt();
  CHECK(s == n);
  CHECK((n * n).is_perfect_square());
  CHECK_FALSE((n * n + BigInt(1)).is_perfect_square());
}

TEST_CASE("rational arithmetic stays normalized") {
  const Rational x(6, -8);
  CHECK(x.num().to_string() == "-3");
  CHECK(x.den().to_string() == "4");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(22, 7) * Rational(7, 22) == Rational(1));
  CHECK(Rational(25, 49).sqrt_exact() == Rational(5, 7));
  CHECK_THROWS_AS(Rational(2, 3).sqrt_exact(), std::domain_error);
}

TEST_CASE("rational poly ring axioms on random exact data") {
  std::uint64_t state = 12345;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return Rational(static_cast<std::int64_t>(state % 19) - 9,
                    1 + static_cast<std::int64_t>((state >> 32) % 7));
  };
  auto poly = [&next]() {
    std::vector<Rational> c;
    for (int i = 0; i < 5; ++i) c.push_back(next());
    return RationalPoly(c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const RationalPoly a = poly(), b = poly(), c = poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    const Rational x = next();
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
  }
}

TEST_CASE("expand products") {
  // (3S-4)(3S-5) = 9S^2 - 27S + 20
  const RationalPoly f1{Rational(-4), Rational(3)};
  const RationalPoly f2{Rational(-5), Rational(3)};
  CHECK(sv::expand({f1, f2}) ==
        RationalPoly{Rational(20), Rational(-27), Rational(9)});
  // constant term of (134 - 114S)^2
  const RationalPoly b{Rational(134), Rational(-114)};
  CHECK(sv::expand({b, b}).coeff(0) == Rational(17956));
}

TEST_CASE("all six identities certify exactly") {
  for (const auto& entry : sv::algebra_catalog()) {
    CAPTURE(entry.name);
    CHECK(sv::certify(entry.id));
  }
  CHECK(sv::certify("FINALPOLY"));
  CHECK_THROWS_AS(sv::certify("NOPE"), std::invalid_argument);
}

TEST_CASE("discriminant spot values") {
  // F(5/3) = (134-190)^2 = 3136 and 4(9*(25/9)+3594*(5/3)-5231) = 3136.
  const RationalPoly F =
      sv::expand({RationalPoly{Rational(134), Rational(-114)},
                  RationalPoly{Rational(134), Rational(-114)}}) +
      sv::expand({RationalPoly{Rational(-5), Rational(3)},
                  RationalPoly{Rational(9), Rational(-5)}}) *
          Rational(864);
  CHECK(F.evaluate(Rational(5, 3)) == Rational(3136));
  CHECK(Rational(4) * (Rational(9) * Rational(25, 9) +
                       Rational(3594) * Rational(5, 3) - Rational(5231)) ==
        Rational(3136));
  CHECK(F.evaluate(Rational(9, 5)) == Rational(126736, 25));
  CHECK(F.evaluate(Rational(9, 5)).is_perfect_square());
}

TEST_CASE("pinch inequality closed form and equality case") {
  // Orthogonal equal-norm pair: exact equality.
  sv::VectorPair eq{{1.0, 0.0}, {0.0, 1.0}};
  const auto req = sv::pinch_inequality(eq);
  CHECK(req.lhs == 0.0);
  CHECK(req.equality_gap == 0.0);

  // Aligned pair: S = 4, |A|^2 = 16, rho = 0, slack -16+16+0-8 = -8.
  sv::VectorPair aligned{{1.0, 0.0}, {1.0, 0.0}};
  const auto ral = sv::pinch_inequality(aligned);
  CHECK(ral.lhs == doctest::Approx(-8.0));
  CHECK(aligned.S() == doctest::Approx(4.0));
  CHECK(aligned.normA2() == doctest::Approx(16.0));
  CHECK(aligned.rhoPerp() == doctest::Approx(0.0));
}

TEST_CASE("pinch slack equals -2(|a|^2-|b|^2)^2 - 8<a,b>^2 exactly") {
  std::uint64_t state = 99;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return Rational(static_cast<std::int64_t>(state % 21) - 10,
                    1 + static_cast<std::int64_t>((state >> 40) % 9));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 1 + trial % 8;
    std::vector<Rational> a, b;
    for (int i = 0; i < p; ++i) {
      a.push_back(next());
      b.push_back(next());
    }
    Rational aa(0), bb(0), ab(0);
    for (int i = 0; i < p; ++i) {
      aa += a[i] * a[i];
      bb += b[i] * b[i];
      ab += a[i] * b[i];
    }
    const Rational expected =
        Rational(-2) * (aa - bb) * (aa - bb) - Rational(8) * ab * ab;
    CHECK(sv::pinch_lhs_exact(a, b) == expected);
    CHECK(sv::pinch_lhs_exact(a, b) <= Rational(0));
  }
}

TEST_CASE("pinch slack scales like t^4") {
  std::vector<Rational> a{Rational(3, 2), Rational(-1, 3)};
  std::vector<Rational> b{Rational(2, 5), Rational(7, 4)};
  const Rational base = sv::pinch_lhs_exact(a, b);
  const Rational t(5, 3);
  std::vector<Rational> at, bt;
  for (auto& x : a) at.push_back(x * t);
  for (auto& x : b) bt.push_back(x * t);
  CHECK(sv::pinch_lhs_exact(at, bt) == base * t.pow(4));
}

TEST_CASE("randomized double-precision pinch sweep") {
  std::uint64_t state = 2024;
  auto uniform = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) * 0x1.0p-53 * 4.0 - 2.0;
  };
  double max_lhs = -1e300;
  for (int trial = 0; trial < 100000; ++trial) {
    const int p = 1 + trial % 8;
    sv::VectorPair vp;
    vp.a.resize(p);
    vp.b.resize(p);
    for (int i = 0; i < p; ++i) {
      vp.a[i] = uniform();
      vp.b[i] = uniform();
    }
    max_lhs = std::max(max_lhs, sv::pinch_inequality(vp).lhs);
  }
  CHECK(max_lhs <= 1e-12);
}
