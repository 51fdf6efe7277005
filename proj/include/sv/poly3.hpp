#pragma once

#include <map>
#include <string>
#include <tuple>

#include "sv/rational.hpp"

namespace sv {

/// Trivariate polynomial over the rationals, sparse monomial map.
/// Used to construct homogeneous harmonic polynomials exactly.
class Poly3 {
 public:
  using Key = std::tuple<int, int, int>;  // exponents of x, y, z

  Poly3() = default;
  static Poly3 monomial(int ex, int ey, int ez, Rational c);
  static Poly3 variable(int axis);  // x, y or z

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<Key, Rational>& terms() const { return terms_; }

  Poly3 operator+(const Poly3& o) const;
  Poly3 operator-(const Poly3& o) const;
  Poly3 operator*(const Poly3& o) const;
  Poly3 operator*(const Rational& c) const;
  Poly3& operator+=(const Poly3& o) { return *this = *this + o; }

  bool operator==(const Poly3& o) const { return terms_ == o.terms_; }

  /// d^2/dx^2 + d^2/dy^2 + d^2/dz^2.
  Poly3 laplacian() const;

  /// Multiplication by (x^2+y^2+z^2)^k.
  Poly3 times_r2(int k) const;

  Rational evaluate(const Rational& x, const Rational& y,
                    const Rational& z) const;

  /// Integral over the unit sphere divided by 4*pi, exact. Odd monomials
  /// vanish; even ones give (a-1)!!(b-1)!!(c-1)!! / (a+b+c+1)!!.
  Rational sphere_average() const;

  std::string to_string() const;

 private:
  void prune();
  std::map<Key, Rational> terms_;
};

/// Splits a homogeneous polynomial into its harmonic components:
/// p = h_d + r^2 h_{d-2} + r^4 h_{d-4} + ... with each h_k harmonic.
/// Returns {h_d, h_{d-2}, ...}. Uses Delta(r^{2j} h_k) = 2j(2k+2j+1) r^{2j-2} h_k.
std::vector<Poly3> harmonic_components(const Poly3& p);

/// Harmonic projection: the top component of the decomposition above.
Poly3 harmonic_projection(const Poly3& p);

}  // namespace sv
