#pragma once

#include <string>

#include "sv/bigint.hpp"

namespace sv {

/// Exact rational with arbitrary-precision backing, always kept normalized
/// (gcd 1, positive denominator).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (num_ * o.den_) < (o.num_ * den_);
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// Exact square root; throws if the value is not a square of a rational.
  Rational sqrt_exact() const;
  bool is_perfect_square() const {
    return sign() >= 0 && num_.is_perfect_square() && den_.is_perfect_square();
  }

  Rational pow(int e) const;

  std::string to_string() const;
  double to_double() const { return static_cast<double>(to_long_double()); }
  long double to_long_double() const {
    return num_.to_long_double() / den_.to_long_double();
  }

 private:
  struct NoNormalize {};
  Rational(BigInt n, BigInt d, NoNormalize)
      : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace sv
