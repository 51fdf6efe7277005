#include <cmath>
#include <map>
#include <utility>

#include <stdexcept>

#include "doctest.h"
#include "sv/jet.hpp"
#include "sv/rational.hpp"

using sv::Jet;
using sv::Rational;

namespace {

// Reference bivariate polynomial with exact coefficients, for checking that
// jets of polynomial expressions are exact truncations.
struct RatPoly2 {
  std::map<std::pair<int, int>, Rational> c;

  static RatPoly2 constant(Rational v) {
    RatPoly2 p;
    p.c[{0, 0}] = v;
    return p;
  }
  static RatPoly2 var(int axis) {
    RatPoly2 p;
    p.c[axis == 0 ? std::pair{1, 0} : std::pair{0, 1}] = Rational(1);
    return p;
  }
  RatPoly2 operator+(const RatPoly2& o) const {
    RatPoly2 r = *this;
    for (auto& [k, v] : o.c) {
      auto it = r.c.find(k);
      if (it == r.c.end())
        r.c[k] = v;
      else
        it->second += v;
    }
    return r;
  }
  RatPoly2 operator*(const RatPoly2& o) const {
    RatPoly2 r;
    for (auto& [ka, va] : c)
      for (auto& [kb, vb] : o.c) {
        auto key = std::pair{ka.first + kb.first, ka.second + kb.second};
        auto it = r.c.find(key);
        if (it == r.c.end())
          r.c[key] = va * vb;
        else
          it->second += va * vb;
      }
    return r;
  }
  // Taylor coefficient around (u0, v0): sum over monomials of
  // C(i, a) C(j, b) coeff u0^{i-a} v0^{j-b}.
  Rational taylor(const Rational& u0, const Rational& v0, int a, int b) const {
    auto binom = [](int n, int k) {
      Rational r(1);
      for (int t = 0; t < k; ++t)
        r = r * Rational(n - t) / Rational(t + 1);
      return r;
    };
    Rational acc(0);
    for (auto& [k, v] : c) {
      const auto [i, j] = k;
      if (i < a || j < b) continue;
      acc += v * binom(i, a) * binom(j, b) * u0.pow(i - a) * v0.pow(j - b);
    }
    return acc;
  }
};

}  // namespace

TEST_CASE("polynomial jets are exact in rational arithmetic") {
  // q(u,v) = (1 + 2u - 3v)^3 * (u + v)^2 + 5uv
  const Rational u0(1, 3), v0(-2, 7);
  const Jet<Rational> u = Jet<Rational>::variable(u0, 0);
  const Jet<Rational> v = Jet<Rational>::variable(v0, 1);
  const Jet<Rational> base = Rational(1) + u * Rational(2) - v * Rational(3);
  const Jet<Rational> jp =
      base * base * base * (u + v) * (u + v) + u * v * Rational(5);

  const RatPoly2 pu = RatPoly2::var(0), pv = RatPoly2::var(1);
  const RatPoly2 pbase = RatPoly2::constant(Rational(1)) +
                         pu * RatPoly2::constant(Rational(2)) +
                         pv * RatPoly2::constant(Rational(-3));
  const RatPoly2 pq = pbase * pbase * pbase * ((pu + pv) * (pu + pv)) +
                      pu * pv * RatPoly2::constant(Rational(5));

  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      CHECK(jp.coeff(a, b) == pq.taylor(u0, v0, a, b));
}

TEST_CASE("reciprocal jet is the exact truncated geometric series") {
  const Rational u0(1, 2), v0(1, 5);
  const Jet<Rational> u = Jet<Rational>::variable(u0, 0);
  const Jet<Rational> v = Jet<Rational>::variable(v0, 1);
  const Jet<Rational> w = Rational(1) + u * u + v * v;
  const Jet<Rational> r = w.reciprocal();
  const Jet<Rational> prod = w * r;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      CHECK(prod.coeff(a, b) == ((a == 0 && b == 0) ? Rational(1) : Rational(0)));
}

TEST_CASE("division and sqrt match closed forms in double") {
  const Jet<double> u = Jet<double>::variable(0.3, 0);
  const Jet<double> v = Jet<double>::variable(-0.4, 1);
  const Jet<double> f = (u * u + v + 2.0) / (1.0 + u * v);
  // f * (1 + uv) reproduces the numerator to roundoff.
  const Jet<double> back = f * (1.0 + u * v);
  const Jet<double> num = u * u + v + 2.0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      CHECK(back.coeff(a, b) == doctest::Approx(num.coeff(a, b)).epsilon(1e-13));

  const Jet<double> g = (1.0 + u * u + v * v).sqrt_jet();
  const Jet<double> gg = g * g;
  const Jet<double> target = 1.0 + u * u + v * v;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      CHECK(gg.coeff(a, b) ==
            doctest::Approx(target.coeff(a, b)).epsilon(1e-13));
}

TEST_CASE("jet coefficients match analytic derivatives of a smooth function") {
  // f(u,v) = sqrt(1+u^2+v^2): value and low-order partials are classical.
  const double u0 = 0.7, v0 = -0.2;
  const Jet<double> u = Jet<double>::variable(u0, 0);
  const Jet<double> v = Jet<double>::variable(v0, 1);
  const Jet<double> f = (1.0 + u * u + v * v).sqrt_jet();
  const double w = std::sqrt(1.0 + u0 * u0 + v0 * v0);
  CHECK(f.value() == doctest::Approx(w).epsilon(1e-15));
  CHECK(f.d(1, 0) == doctest::Approx(u0 / w).epsilon(1e-14));
  CHECK(f.d(0, 1) == doctest::Approx(v0 / w).epsilon(1e-14));
  CHECK(f.d(2, 0) ==
        doctest::Approx((1.0 + v0 * v0) / (w * w * w)).epsilon(1e-13));
  CHECK(f.d(1, 1) == doctest::Approx(-u0 * v0 / (w * w * w)).epsilon(1e-13));
}

TEST_CASE("derivative lowers the trusted order") {
  Jet<double> u = Jet<double>::variable(0.1, 0);
  Jet<double> f = u * u * u;
  CHECK(f.order() == 5);
  Jet<double> fu = f.derivative(0);
  CHECK(fu.order() == 4);
  CHECK(fu.value() == doctest::Approx(3 * 0.1 * 0.1));
  CHECK(f.derivative(0).derivative(0).derivative(0).value() ==
        doctest::Approx(6.0));
}

TEST_CASE("order above the ring limit is rejected") {
  CHECK_THROWS_AS(Jet<double>(1.0, 6), std::invalid_argument);
  CHECK_THROWS_AS(Jet<double>(1.0, -1), std::invalid_argument);
}
