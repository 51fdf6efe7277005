#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace sv {

/// Truncated bivariate Taylor expansion of a scalar in two chart variables,
/// total degree <= 5. Coefficients are Taylor coefficients, i.e. the mixed
/// partial d^(i+j)f / du^i dv^j divided by i! j!.
///
/// The `order` field tracks how many total degrees of the expansion are
/// trustworthy: a product is correct to the smaller operand order, a
/// derivative loses one order. Arithmetic on jets of polynomial or rational
/// expressions is the exact truncation of the true Taylor series.
///
/// R is any field with the usual operators; floating types additionally
/// support sqrt(). Rational coefficients make every ring operation exact.
template <class R>
class Jet {
 public:
  static constexpr int kMaxOrder = 5;
  static constexpr int kCoeffs = (kMaxOrder + 1) * (kMaxOrder + 2) / 2;  // 21

  Jet() : order_(kMaxOrder) { coeff_.fill(R(0)); }

  explicit Jet(const R& c0, int order = kMaxOrder) : order_(clamp(order)) {
    coeff_.fill(R(0));
    coeff_[0] = c0;
  }

  /// Jet of the chart variable itself: value + first-order unit coefficient.
  /// axis 0 is u, axis 1 is v.
  static Jet variable(const R& value, int axis, int order = kMaxOrder) {
    Jet j(value, order);
    j.coeff_[axis == 0 ? index(1, 0) : index(0, 1)] = R(1);
    return j;
  }

  int order() const { return order_; }
  const R& value() const { return coeff_[0]; }

  /// Taylor coefficient of u^i v^j (zero beyond the trusted order).
  R coeff(int i, int j) const {
    if (i + j > order_) return R(0);
    return coeff_[index(i, j)];
  }

  /// Partial derivative value at the expansion point.
  R d(int i, int j) const {
    R c = coeff(i, j);
    for (int k = 2; k <= i; ++k) c = c * R(k);
    for (int k = 2; k <= j; ++k) c = c * R(k);
    return c;
  }

  Jet truncated(int order) const {
    Jet r = *this;
    r.order_ = clamp(std::min(order, order_));
    for (int d = r.order_ + 1; d <= kMaxOrder; ++d)
      for (int j = 0; j <= d; ++j) r.coeff_[index(d - j, j)] = R(0);
    return r;
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
  }

  Jet operator+(const Jet& o) const {
    Jet r;
    r.order_ = std::min(order_, o.order_);
    for (int k = 0; k < kCoeffs; ++k) r.coeff_[k] = coeff_[k] + o.coeff_[k];
    return r.truncated(r.order_);
  }

  Jet operator-(const Jet& o) const { return *this + (-o); }

  Jet operator*(const Jet& o) const {
    Jet r;
    r.order_ = std::min(order_, o.order_);
    for (int d1 = 0; d1 <= order_ && d1 <= r.order_; ++d1) {
      for (int j1 = 0; j1 <= d1; ++j1) {
        const R& a = coeff_[index(d1 - j1, j1)];
        if (a == R(0)) continue;
        const int dmax = r.order_ - d1;
        for (int d2 = 0; d2 <= o.order_ && d2 <= dmax; ++d2) {
          for (int j2 = 0; j2 <= d2; ++j2) {
            const R& b = o.coeff_[index(d2 - j2, j2)];
            if (b == R(0)) continue;
            r.coeff_[index(d1 + d2 - j1 - j2, j1 + j2)] += a * b;
          }
        }
      }
    }
    return r;
  }

  Jet operator+(const R& s) const {
    Jet r = *this;
    r.coeff_[0] += s;
    return r;
  }
  Jet operator-(const R& s) const { return *this + (-s); }
  Jet operator*(const R& s) const {
    Jet r = *this;
    for (auto& c : r.coeff_) c = c * s;
    return r;
  }
  Jet operator/(const R& s) const {
    Jet r = *this;
    for (auto& c : r.coeff_) c = c / s;
    return r;
  }
  friend Jet operator+(const R& s, const Jet& j) { return j + s; }
  friend Jet operator-(const R& s, const Jet& j) { return (-j) + s; }
  friend Jet operator*(const R& s, const Jet& j) { return j * s; }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator+=(const R& s) { return *this = *this + s; }
  Jet& operator-=(const R& s) { return *this = *this - s; }
  Jet& operator*=(const R& s) { return *this = *this * s; }

  /// d/du (axis 0) or d/dv (axis 1); the result is trusted one order lower.
  Jet derivative(int axis) const {
    Jet r;
    r.order_ = std::max(order_ - 1, 0);
    for (int d = 0; d < kMaxOrder; ++d) {
      for (int j = 0; j <= d; ++j) {
        const int i = d - j;
        if (axis == 0)
          r.coeff_[index(i, j)] = coeff_safe(i + 1, j) * R(i + 1);
        else
          r.coeff_[index(i, j)] = coeff_safe(i, j + 1) * R(j + 1);
      }
    }
    return r.truncated(r.order_);
  }

  /// 1/jet. Requires a nonzero constant term.
  Jet reciprocal() const {
    const R c0 = coeff_[0];
    if (c0 == R(0)) throw std::domain_error("Jet: reciprocal at zero");
    // 1/(c0 (1+x)) with x = this/c0 - 1, |x| nilpotent to the order.
    Jet x = (*this / c0) - R(1);
    Jet acc(R(1), order_);
    Jet term(R(1), order_);
    R sign(1);
    for (int k = 1; k <= order_; ++k) {
      term = term * x;
      sign = -sign;
      acc += term * sign;
    }
    return acc / c0;
  }

  Jet operator/(const Jet& o) const { return *this * o.reciprocal(); }

  /// sqrt(jet) for floating R; positive constant term required.
  Jet sqrt_jet() const {
    using std::sqrt;
    const R c0 = coeff_[0];
    if (!(c0 > R(0))) throw std::domain_error("Jet: sqrt at nonpositive value");
    const R s0 = sqrt(c0);
    Jet x = (*this / c0) - R(1);
    // Binomial series for (1+x)^(1/2) through degree 5.
    static constexpr int kNum[6] = {1, 1, -1, 1, -5, 7};
    static constexpr int kDen[6] = {1, 2, 8, 16, 128, 256};
    Jet acc(R(1), order_);
    Jet term(R(1), order_);
    for (int k = 1; k <= order_; ++k) {
      term = term * x;
      acc += term * (R(kNum[k]) / R(kDen[k]));
    }
    return acc * s0;
  }

 private:
  static int clamp(int order) {
    if (order < 0 || order > kMaxOrder)
      throw std::invalid_argument("Jet: order out of range");
    return order;
  }

  static constexpr int index(int i, int j) {
    const int d = i + j;
    return d * (d + 1) / 2 + j;
  }

  R coeff_safe(int i, int j) const {
    return (i + j > kMaxOrder) ? R(0) : coeff_[index(i, j)];
  }

  int order_;
  std::array<R, kCoeffs> coeff_;
};

template <class R>
Jet<R> jet_pow(const Jet<R>& base, int e) {
  Jet<R> r(R(1), base.order());
  for (int k = 0; k < e; ++k) r = r * base;
  return r;
}

}  // namespace sv
