#include "sv/gap.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sv {

namespace {

constexpr double kLo = 5.0 / 3.0;
constexpr double kHi = 9.0 / 5.0;

void require_domain(double s_min) {
  // Tiny slack for values produced by rounding the endpoints themselves.
  if (s_min < kLo - 1e-12 || s_min > kHi + 1e-12)
    throw std::domain_error("gap: S_min outside [5/3, 9/5]");
}

std::string fixed5(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", x);
  return buf;
}

}  // namespace

CalabiConstants calabi_constants_exact(int s) {
  if (s < 1) throw std::invalid_argument("calabi_constants: s must be >= 1");
  const Rational denom = Rational(s) * Rational(s + 1);
  return CalabiConstants{Rational(2) / denom,
                         Rational(2 * (s - 1)) * Rational(s + 2) / denom};
}

std::pair<double, double> calabi_constants(int s) {
  const CalabiConstants c = calabi_constants_exact(s);
  return {c.K.to_double(), c.S.to_double()};
}

GapResult gap_function(double s_min) {
  require_domain(s_min);
  const double B = 134.0 - 114.0 * s_min;
  const double F = B * B + 864.0 * (3.0 * s_min - 5.0) * (9.0 - 5.0 * s_min);
  const double f = (B + std::sqrt(F)) / 108.0;
  const double Q = 9.0 * s_min * s_min + 3594.0 * s_min - 5231.0;
  const double fp =
      (6.0 * (3.0 * s_min + 599.0) / std::sqrt(Q) - 114.0) / 108.0;
  return GapResult{s_min, F, f, fp};
}

Rational gap_function_exact(const Rational& s_min) {
  const Rational B = Rational(134) - Rational(114) * s_min;
  const Rational F =
      B * B + Rational(864) * (Rational(3) * s_min - Rational(5)) *
                  (Rational(9) - Rational(5) * s_min);
  const Rational root = F.sqrt_exact();
  return (B + root) / Rational(108);
}

CriticalPoint critical_point() {
  // 45x^2 + 17970x - 31211 = 0; the positive root without cancellation:
  // x = 2c / (b + sqrt(b^2 + 4ac)) with a=45, b=17970, c=31211.
  const double disc = 17970.0 * 17970.0 + 4.0 * 45.0 * 31211.0;
  double x = 2.0 * 31211.0 / (17970.0 + std::sqrt(disc));

  // Cross-validate by bisection on f' over [5/3, 9/5].
  double lo = kLo, hi = kHi;
  if (!(gap_function(lo).f_prime > 0.0) || !(gap_function(hi).f_prime < 0.0))
    throw std::logic_error("gap: f' does not change sign on the interval");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (gap_function(mid).f_prime > 0.0 ? lo : hi) = mid;
  }
  const double refined = 0.5 * (lo + hi);
  if (std::abs(refined - x) > 1e-9)
    throw std::logic_error("gap: quadratic root and bisection disagree");
  x = refined;
  if (std::abs(gap_function(x).f_prime) > 1e-10)
    throw std::logic_error("gap: residual of f' too large at the root");

  CriticalPoint out{};
  out.s_star = x;
  out.f_max = gap_function(x).f;
  out.forbidden_lo = std::ceil(x * 1e5) / 1e5;
  const double reach = out.forbidden_lo + gap_function(out.forbidden_lo).f;
  out.forbidden_hi = std::floor(reach * 1e5) / 1e5;
  out.forbidden_lo_str = fixed5(out.forbidden_lo);
  out.forbidden_hi_str = fixed5(out.forbidden_hi);
  return out;
}

bool theorem_bound(double s_min, double s_max) {
  require_domain(s_min);
  require_domain(s_max);
  if (s_max < s_min) throw std::invalid_argument("theorem_bound: S_max < S_min");
  return s_max - s_min < gap_function(s_min).f;
}

}  // namespace sv
