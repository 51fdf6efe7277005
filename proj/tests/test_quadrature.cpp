#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sv/quadrature.hpp"

using sv::AmbientPoly;
using sv::build_calabi;
using sv::build_surface_quadrature;
using sv::gauss_legendre;
using sv::HarmonicImmersion;
using sv::ImmersionEval;
using sv::SurfaceQuadrature;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Gauss-Legendre integrates monomials exactly to degree 2n-1") {
  for (int n : {2, 5, 16, 24}) {
    const auto gl = gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      long double acc = 0.0L;
      for (int i = 0; i < n; ++i)
        acc += gl.weights[i] * std::pow(gl.nodes[i], static_cast<long double>(k));
      const double expected = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
      CHECK(static_cast<double>(acc) ==
            doctest::Approx(expected).scale(1.0).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("total weight reproduces the induced area 2 pi s(s+1)") {
  struct Case {
    int s, n;
    double tol;
  };
  for (const Case c : {Case{1, 16, 1e-10}, Case{2, 16, 1e-9},
                       Case{3, 24, 1e-9}, Case{4, 24, 1e-8}}) {
    const ImmersionEval<double> ev(build_calabi(c.s));
    const auto sq = build_surface_quadrature(ev, c.n);
    const double expected = 2.0 * kPi * c.s * (c.s + 1);
    CHECK(std::abs(sq.area() - expected) < c.tol * expected);
  }
  const ImmersionEval<double> ev(build_calabi(2));
  CHECK_THROWS_AS(build_surface_quadrature(ev, 1), std::invalid_argument);
}

TEST_CASE("round-measure rule integrates spherical harmonics exactly") {
  // Components of any degree-s immersion integrate to zero against the
  // round measure; products of distinct ones too; squares give the
  // normalization 4 pi / (2s+1).
  const HarmonicImmersion imm = build_calabi(3);
  const ImmersionEval<double> ev(imm);
  const auto sq = build_surface_quadrature(ev, 16);
  using Node = SurfaceQuadrature<double>::Node;
  for (int a = 0; a < imm.ambient_dim(); ++a) {
    const double single = sq.integrate_round([&](const Node& n) {
      return imm.component_value(a, sv::embed_chart(n.point));
    });
    CHECK(std::abs(single) < 1e-11);
    for (int b = a; b < imm.ambient_dim(); ++b) {
      const double prod = sq.integrate_round([&](const Node& n) {
        const auto x = sv::embed_chart(n.point);
        return imm.component_value(a, x) * imm.component_value(b, x);
      });
      const double expected = a == b ? 4.0 * kPi / (2 * imm.degree + 1) : 0.0;
      CHECK(prod == doctest::Approx(expected).scale(1.0).epsilon(1e-11));
    }
  }
}

TEST_CASE("Gauss-Bonnet across degrees") {
  struct Case {
    int s, n;
    double tol;
  };
  for (const Case c : {Case{1, 16, 1e-10}, Case{2, 16, 1e-9},
                       Case{3, 24, 1e-9}, Case{4, 24, 1e-8}}) {
    const ImmersionEval<double> ev(build_calabi(c.s));
    const auto sq = build_surface_quadrature(ev, c.n);
    CAPTURE(c.s);
    CHECK(sv::gauss_bonnet_residual(sq) < c.tol);
  }
}

TEST_CASE("the three integral identities hold, including nonzero cases") {
  for (int s : {2, 3, 4}) {
    const ImmersionEval<double> ev(build_calabi(s));
    const auto sq = build_surface_quadrature(ev, 24);
    for (int which : {1, 2, 3}) {
      const auto pr = sv::integral_identity(sq, which);
      CAPTURE(s);
      CAPTURE(which);
      CHECK(std::abs(pr.lhs - pr.rhs) < 1e-6 * (1.0 + std::abs(pr.lhs)));
      if (which == 1) CHECK(pr.rhs >= -1e-10);
    }
    CHECK_THROWS_AS(sv::integral_identity(sq, 4), std::invalid_argument);
  }

  // Nonzero closed forms at degree 4: both sides of identity 1 equal
  // (9/5)(7/5) Area = 100.8 pi, and identity 2 gives (126/125) Area.
  const ImmersionEval<double> ev4(build_calabi(4));
  const auto sq4 = build_surface_quadrature(ev4, 24);
  const double area4 = 40.0 * kPi;
  const auto id1 = sv::integral_identity(sq4, 1);
  CHECK(id1.lhs == doctest::Approx(63.0 / 25.0 * area4).epsilon(1e-7));
  CHECK(id1.rhs == doctest::Approx(63.0 / 25.0 * area4).epsilon(1e-7));
  const auto id2 = sv::integral_identity(sq4, 2);
  CHECK(id2.lhs == doctest::Approx(126.0 / 125.0 * area4).epsilon(1e-7));
  CHECK(id2.rhs == doctest::Approx(126.0 / 125.0 * area4).epsilon(1e-7));
  const auto id3 = sv::integral_identity(sq4, 3);
  CHECK(std::abs(id3.lhs) < 1e-6);
  CHECK(std::abs(id3.rhs) < 1e-6);

  // Degree 2 case: 3S-4 = 0 kills both sides of identity 1.
  const ImmersionEval<double> ev2(build_calabi(2));
  const auto sq2 = build_surface_quadrature(ev2, 24);
  const auto id12 = sv::integral_identity(sq2, 1);
  CHECK(std::abs(id12.lhs) < 1e-8);
  CHECK(std::abs(id12.rhs) < 1e-8);
}

TEST_CASE("doubling the order leaves integrals unchanged") {
  const ImmersionEval<double> ev(build_calabi(2));
  const auto sq16 = build_surface_quadrature(ev, 16);
  const auto sq32 = build_surface_quadrature(ev, 32);
  CHECK(std::abs(sq16.area() - sq32.area()) < 1e-9 * sq32.area());
  CHECK(std::abs(sv::gauss_bonnet_residual(sq16) -
                 sv::gauss_bonnet_residual(sq32)) < 1e-9);
  for (int which : {1, 2, 3}) {
    const auto a = sv::integral_identity(sq16, which);
    const auto b = sv::integral_identity(sq32, which);
    CHECK(std::abs(a.lhs - b.lhs) < 1e-9 * (1.0 + std::abs(b.lhs)));
    CHECK(std::abs(a.rhs - b.rhs) < 1e-9 * (1.0 + std::abs(b.rhs)));
  }
}

TEST_CASE("Bochner identity for polynomial fields") {
  for (int s : {1, 2, 3}) {
    const ImmersionEval<double> ev(build_calabi(s));
    const auto sq = build_surface_quadrature(ev, 24);
    const AmbientPoly fields[] = {
        AmbientPoly::coordinate(0),
        AmbientPoly::coordinate(2),
        AmbientPoly::product(0, 1),
    };
    for (const auto& u : fields) {
      const auto br = sv::bochner_residual(ev, sq, u);
      CAPTURE(s);
      CHECK(br.grad_energy > 0.1);  // nonconstant restriction
      CHECK(br.residual < 1e-6 * br.grad_energy);
      CHECK(br.div_residual < 1e-8);
    }
    // Constant field: identically zero integrand.
    AmbientPoly constant;
    constant.terms.push_back({1.0, {}});
    const auto bc = sv::bochner_residual(ev, sq, constant);
    CHECK(bc.residual == 0.0);
  }
}

TEST_CASE("gradient bound holds with constant S") {
  for (int s : {2, 3, 4}) {
    const ImmersionEval<double> ev(build_calabi(s));
    const auto sq = build_surface_quadrature(ev, 16);
    const auto pr = sv::gradient_bound_check(sq);
    CAPTURE(s);
    CHECK(pr.lhs <= pr.rhs + 1e-8);
    CHECK(std::abs(pr.lhs) < 1e-8);
  }
}

TEST_CASE("rule serializes to CSV") {
  const ImmersionEval<double> ev(build_calabi(2));
  const auto sq = build_surface_quadrature(ev, 4);
  const std::string csv = sv::rule_to_csv(sq);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "chart,u,v,weight");
  int rows = 0;
  double total = 0.0;
  while (std::getline(in, line)) {
    ++rows;
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1),
               c3 = line.find(',', c2 + 1);
    const std::string chart = line.substr(0, c1);
    CHECK((chart == "north" || chart == "south"));
    total += std::stod(line.substr(c3 + 1));
  }
  CHECK(rows == 4 * 8);
  CHECK(total == doctest::Approx(12.0 * kPi).epsilon(1e-3));
}
