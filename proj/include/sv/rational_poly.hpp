#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sv/rational.hpp"

namespace sv {

/// Exact-rational univariate polynomial, dense ascending-degree layout with
/// trailing zeros stripped. Equality is coefficient-list identity.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> ascending)
      : coeffs_(ascending) {
    normalize();
  }
  explicit RationalPoly(std::vector<Rational> ascending)
      : coeffs_(std::move(ascending)) {
    normalize();
  }
  static RationalPoly constant(Rational c) { return RationalPoly({std::move(c)}); }
  /// c * X^d
  static RationalPoly monomial(Rational c, int d);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int d) const {
    return d >= 0 && d <= degree() ? coeffs_[d] : Rational(0);
  }

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rational& c) const;
  RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
  RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }

  bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const RationalPoly& o) const { return !(*this == o); }

  Rational evaluate(const Rational& x) const;
  RationalPoly derivative() const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Exact product of a list of factors.
RationalPoly expand(const std::vector<RationalPoly>& factors);

}  // namespace sv
