#include "sv/rational_poly.hpp"

namespace sv {

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPoly RationalPoly::monomial(Rational c, int d) {
  std::vector<Rational> v(d + 1, Rational(0));
  v[d] = std::move(c);
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()),
                          Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  return *this + o * Rational(-1);
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return RationalPoly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return RationalPoly(std::move(v));
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly();
  std::vector<Rational> v(coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rational(static_cast<std::int64_t>(i));
  return RationalPoly(std::move(v));
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int d = degree(); d >= 0; --d) {
    if (coeffs_[d].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[d].to_string() + ")";
    if (d > 0) s += "*S^" + std::to_string(d);
  }
  return s;
}

RationalPoly expand(const std::vector<RationalPoly>& factors) {
  RationalPoly r = RationalPoly::constant(Rational(1));
  for (const auto& f : factors) r = r * f;
  return r;
}

}  // namespace sv
