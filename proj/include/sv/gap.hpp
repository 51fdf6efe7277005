#pragma once

#include <string>
#include <utility>

#include "sv/rational.hpp"

namespace sv {

/// Exact Calabi constants: K(s) = 2/(s(s+1)), S(s) = 2(s-1)(s+2)/(s(s+1)).
struct CalabiConstants {
  Rational K;
  Rational S;
};
CalabiConstants calabi_constants_exact(int s);
std::pair<double, double> calabi_constants(int s);  // (K, S)

/// Gap function data at one value of S_min in [5/3, 9/5]:
///   F = (134-114x)^2 + 864(3x-5)(9-5x)
///   f = (134-114x+sqrt(F))/108
///   f' = ((6(3x+599))/sqrt(9x^2+3594x-5231) - 114)/108
struct GapResult {
  double s_min;
  double F;
  double f;
  double f_prime;
};
GapResult gap_function(double s_min);

/// Exact evaluation of f at a rational argument; requires F to be a perfect
/// rational square there (true at both interval endpoints).
Rational gap_function_exact(const Rational& s_min);

/// The interior critical point of f and the forbidden S-interval it yields.
/// s_star solves 45x^2 + 17970x - 31211 = 0 via the cancellation-free
/// quadratic formula, then is refined by bisection on f' to width < 1e-12.
/// forbidden_lo = s_star rounded up at 5 decimals; forbidden_hi is
/// lo + f(lo) rounded down at 5 decimals (f is increasing-then-decreasing
/// and x + f(x) is increasing, so the pair excludes every S_min >= lo).
struct CriticalPoint {
  double s_star;
  double f_max;
  double forbidden_lo;
  double forbidden_hi;
  std::string forbidden_lo_str;  // fixed 5-decimal rendering
  std::string forbidden_hi_str;
};
CriticalPoint critical_point();

/// True iff the pair (S_min, S_max) is excluded: S_max - S_min < f(S_min).
bool theorem_bound(double s_min, double s_max);

}  // namespace sv
