#include "sv/rational.hpp"

#include <stdexcept>

namespace sv {

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::sqrt_exact() const {
  if (sign() < 0) throw std::domain_error("Rational: sqrt of negative value");
  BigInt rn = num_.isqrt();
  BigInt rd = den_.isqrt();
  if (rn * rn != num_ || rd * rd != den_)
    throw std::domain_error("Rational: not a perfect square");
  return Rational(rn, rd);
}

Rational Rational::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational: 0^negative");
    return Rational(den_.pow(static_cast<unsigned>(-e)),
                    num_.pow(static_cast<unsigned>(-e)));
  }
  return Rational(num_.pow(static_cast<unsigned>(e)),
                  den_.pow(static_cast<unsigned>(e)));
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace sv
