#include "sv/algebra.hpp"

#include <stdexcept>

namespace sv {

namespace {

Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Handy S-polynomial builders.
RationalPoly S() { return RationalPoly::monomial(rat(1), 1); }
RationalPoly lin(std::int64_t c1, std::int64_t c0) {
  return RationalPoly{rat(c0), rat(c1)};
}

// Constant-S closed forms on a surface with everywhere-constant S:
//   B1 = 1/2 S(3S-4)
//   B2 = 1/4 S(3S-4)(9S-14)
//   B3 = 1/8 S(3S-4)(45S^2-144S+116) + 1/2 S(3S-4)(3S-5)(5S-9)
// The last term of B3 comes from the constant-S reduction of the third
// integral identity; it vanishes at S in {4/3, 5/3, 9/5}.
RationalPoly closed_B1() {
  return expand({S(), lin(3, -4)}) * rat(1, 2);
}
RationalPoly closed_B2() {
  return expand({S(), lin(3, -4), lin(9, -14)}) * rat(1, 4);
}
RationalPoly quartic_4514() {
  return RationalPoly{rat(116), rat(-144), rat(45)};  // 45S^2-144S+116
}
RationalPoly closed_B3() {
  return expand({S(), lin(3, -4), quartic_4514()}) * rat(1, 8) +
         expand({S(), lin(3, -4), lin(3, -5), lin(5, -9)}) * rat(1, 2);
}

bool certify_finalpoly() {
  // 1/8 S(3S-4)(-39S^2+112S-80) + 7/8 S(2-S)(3S-4)(9S-14)
  //   + 1/4 S(3S-4)^2 (7S-12)  ==  -1/2 S(3S-4)(3S-5)(5S-9)
  RationalPoly lhs =
      expand({S(), lin(3, -4), RationalPoly{rat(-80), rat(112), rat(-39)}}) *
          rat(1, 8) +
      expand({S(), lin(-1, 2), lin(3, -4), lin(9, -14)}) * rat(7, 8) +
      expand({S(), lin(3, -4), lin(3, -4), lin(7, -12)}) * rat(1, 4);
  RationalPoly rhs =
      expand({S(), lin(3, -4), lin(3, -5), lin(5, -9)}) * rat(-1, 2);
  return lhs == rhs;
}

RationalPoly discriminant_F() {
  // (134-114S)^2 + 864 (3S-5)(9-5S)
  return expand({lin(-114, 134), lin(-114, 134)}) +
         expand({lin(3, -5), lin(-5, 9)}) * rat(864);
}

RationalPoly radicand_Q() {
  return RationalPoly{rat(-5231), rat(3594), rat(9)};  // 9S^2+3594S-5231
}

bool certify_fdisc() { return discriminant_F() == radicand_Q() * rat(4); }

bool certify_epsroots() {
  // Quadratic -54 e^2 + B e + C with B = 134-114S, C = 4(3S-5)(9-5S).
  // Claimed roots (B +- sqrt(F))/108 with F = B^2 + 216 C. Vieta:
  //   sum     = 2B/108          == -B/(-54)
  //   product = (B^2 - F)/108^2 == C/(-54)
  RationalPoly B = lin(-114, 134);
  RationalPoly C = expand({lin(3, -5), lin(-5, 9)}) * rat(4);
  RationalPoly F = expand({B, B}) + C * rat(216);
  if (F != discriminant_F()) return false;
  const bool sum_ok = B * rat(2, 108) == B * rat(1, 54);
  const bool prod_ok =
      (expand({B, B}) - F) * rat(1, 108 * 108) == C * rat(-1, 54);
  return sum_ok && prod_ok;
}

bool certify_critquad() {
  // f'(S) = 0  <=>  6(3S+599) = 114 sqrt(Q)  <=>  (3S+599)^2 = 361 Q.
  // The difference must be a multiple of 45S^2 + 17970S - 31211.
  RationalPoly lhs = radicand_Q() * rat(361) - expand({lin(3, 599), lin(3, 599)});
  RationalPoly target = RationalPoly{rat(-31211), rat(17970), rat(45)};
  return lhs == target * rat(72);
}

bool certify_ksrel() {
  // 2 - 2K(s) - S(s) over the common denominator s(s+1):
  // 2 s(s+1) - 4 - 2(s-1)(s+2) must vanish identically.
  RationalPoly s = S();
  RationalPoly numerator = expand({s, lin(1, 1)}) * rat(2) -
                           RationalPoly::constant(rat(4)) -
                           expand({lin(1, -1), lin(1, 2)}) * rat(2);
  return numerator.is_zero();
}

bool certify_combozero() {
  // -(21S^2-64S+49) B1 + 7(1-S/2) B2 + 1/4 S(3S-4)^2(7S-12) + B3 == 0
  // with the constant-S closed forms above. Equivalently, with the
  // four-factor tail of B3 moved to the right-hand side, the truncated
  // combination equals -1/2 S(3S-4)(3S-5)(5S-9).
  RationalPoly combo =
      RationalPoly{rat(-49), rat(64), rat(-21)} * closed_B1() +
      (RationalPoly::constant(rat(1)) - S() * rat(1, 2)) * rat(7) * closed_B2() +
      expand({S(), lin(3, -4), lin(3, -4), lin(7, -12)}) * rat(1, 4) +
      closed_B3();
  if (!combo.is_zero()) return false;
  RationalPoly truncated =
      RationalPoly{rat(-49), rat(64), rat(-21)} * closed_B1() +
      (RationalPoly::constant(rat(1)) - S() * rat(1, 2)) * rat(7) * closed_B2() +
      expand({S(), lin(3, -4), lin(3, -4), lin(7, -12)}) * rat(1, 4) +
      expand({S(), lin(3, -4), quartic_4514()}) * rat(1, 8);
  return truncated == expand({S(), lin(3, -4), lin(3, -5), lin(5, -9)}) * rat(-1, 2);
}

}  // namespace

const std::vector<AlgebraCatalogEntry>& algebra_catalog() {
  static const std::vector<AlgebraCatalogEntry> kCatalog = {
      {AlgebraId::kFinalPoly, "FINALPOLY",
       "1/8 S(3S-4)(-39S^2+112S-80) + 7/8 S(2-S)(3S-4)(9S-14) + "
       "1/4 S(3S-4)^2(7S-12) = -1/2 S(3S-4)(3S-5)(5S-9)"},
      {AlgebraId::kFDisc, "FDISC",
       "(134-114S)^2 + 864(3S-5)(9-5S) = 4(9S^2+3594S-5231)"},
      {AlgebraId::kEpsRoots, "EPSROOTS",
       "roots of -54e^2+(134-114S)e+4(3S-5)(9-5S) are (134-114S+-sqrt(F))/108"},
      {AlgebraId::kCritQuad, "CRITQUAD",
       "361(9S^2+3594S-5231)-(3S+599)^2 = 72(45S^2+17970S-31211)"},
      {AlgebraId::kKsRel, "KSREL", "2 - 2K(s) - S(s) = 0 with K=2/(s(s+1))"},
      {AlgebraId::kComboZero, "COMBOZERO",
       "constant-S B1,B2,B3 satisfy -(21S^2-64S+49)B1 + 7(1-S/2)B2 + "
       "1/4 S(3S-4)^2(7S-12) + B3 = 0"},
  };
  return kCatalog;
}

bool certify(AlgebraId id) {
  switch (id) {
    case AlgebraId::kFinalPoly: return certify_finalpoly();
    case AlgebraId::kFDisc: return certify_fdisc();
    case AlgebraId::kEpsRoots: return certify_epsroots();
    case AlgebraId::kCritQuad: return certify_critquad();
    case AlgebraId::kKsRel: return certify_ksrel();
    case AlgebraId::kComboZero: return certify_combozero();
  }
  throw std::invalid_argument("certify: unknown identity");
}

bool certify(const std::string& name) {
  for (const auto& e : algebra_catalog())
    if (name == e.name) return certify(e.id);
  throw std::invalid_argument("certify: unknown identity name " + name);
}

double VectorPair::dot_aa() const {
  double s = 0;
  for (double x : a) s += x * x;
  return s;
}
double VectorPair::dot_bb() const {
  double s = 0;
  for (double x : b) s += x * x;
  return s;
}
double VectorPair::dot_ab() const {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double VectorPair::normA2() const {
  const double aa = dot_aa(), bb = dot_bb(), ab = dot_ab();
  return 4.0 * aa * aa + 4.0 * bb * bb + 8.0 * ab * ab;
}

double VectorPair::rhoPerp() const {
  const double aa = dot_aa(), bb = dot_bb(), ab = dot_ab();
  return 16.0 * (aa * bb - ab * ab);
}

PinchResult pinch_inequality(const VectorPair& vp) {
  if (vp.a.size() != vp.b.size() || vp.a.empty())
    throw std::invalid_argument("pinch_inequality: need matching p >= 1");
  const double s = vp.S();
  const double lhs = -s * s + vp.normA2() + vp.rhoPerp() - 0.5 * s * s;
  const double da = vp.dot_aa() - vp.dot_bb();
  const double gap = 8.0 * vp.dot_ab() * vp.dot_ab() + 2.0 * da * da;
  return PinchResult{lhs, gap};
}

Rational pinch_lhs_exact(const std::vector<Rational>& a,
                         const std::vector<Rational>& b) {
  Rational aa(0), bb(0), ab(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    aa += a[i] * a[i];
    bb += b[i] * b[i];
    ab += a[i] * b[i];
  }
  const Rational s = (aa + bb) * Rational(2);
  const Rational normA2 =
      aa * aa * Rational(4) + bb * bb * Rational(4) + ab * ab * Rational(8);
  const Rational rho = (aa * bb - ab * ab) * Rational(16);
  return s * s * Rational(-1) + normA2 + rho - s * s / Rational(2);
}

}  // namespace sv
