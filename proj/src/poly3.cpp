#include "sv/poly3.hpp"

#include <stdexcept>
#include <vector>

namespace sv {

Poly3 Poly3::monomial(int ex, int ey, int ez, Rational c) {
  Poly3 p;
  if (!c.is_zero()) p.terms_[{ex, ey, ez}] = std::move(c);
  return p;
}

Poly3 Poly3::variable(int axis) {
  switch (axis) {
    case 0: return monomial(1, 0, 0, Rational(1));
    case 1: return monomial(0, 1, 0, Rational(1));
    case 2: return monomial(0, 0, 1, Rational(1));
    default: throw std::invalid_argument("Poly3: bad axis");
  }
}

int Poly3::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    d = std::max(d, std::get<0>(k) + std::get<1>(k) + std::get<2>(k));
  return d;
}

void Poly3::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

Poly3 Poly3::operator+(const Poly3& o) const {
  Poly3 r = *this;
  for (const auto& [k, c] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end())
      r.terms_[k] = c;
    else
      it->second += c;
  }
  r.prune();
  return r;
}

Poly3 Poly3::operator-(const Poly3& o) const { return *this + o * Rational(-1); }

Poly3 Poly3::operator*(const Poly3& o) const {
  Poly3 r;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k{std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
            std::get<2>(ka) + std::get<2>(kb)};
      auto it = r.terms_.find(k);
      if (it == r.terms_.end())
        r.terms_[k] = ca * cb;
      else
        it->second += ca * cb;
    }
  }
  r.prune();
  return r;
}

Poly3 Poly3::operator*(const Rational& c) const {
  Poly3 r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

Poly3 Poly3::laplacian() const {
  Poly3 r;
  for (const auto& [k, c] : terms_) {
    auto [a, b, d] = k;
    if (a >= 2) r += monomial(a - 2, b, d, c * Rational(a * (a - 1)));
    if (b >= 2) r += monomial(a, b - 2, d, c * Rational(b * (b - 1)));
    if (d >= 2) r += monomial(a, b, d - 2, c * Rational(d * (d - 1)));
  }
  return r;
}

Poly3 Poly3::times_r2(int k) const {
  Poly3 r2 = monomial(2, 0, 0, Rational(1)) + monomial(0, 2, 0, Rational(1)) +
             monomial(0, 0, 2, Rational(1));
  Poly3 r = *this;
  for (int i = 0; i < k; ++i) r = r * r2;
  return r;
}

Rational Poly3::evaluate(const Rational& x, const Rational& y,
                         const Rational& z) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    auto [a, b, d] = k;
    acc += c * x.pow(a) * y.pow(b) * z.pow(d);
  }
  return acc;
}

namespace {
Rational double_factorial(int n) {
  Rational r(1);
  for (int k = n; k >= 2; k -= 2) r *= Rational(k);
  return r;
}
}  // namespace

Rational Poly3::sphere_average() const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    auto [a, b, d] = k;
    if (a % 2 || b % 2 || d % 2) continue;
    acc += c * double_factorial(a - 1) * double_factorial(b - 1) *
           double_factorial(d - 1) / double_factorial(a + b + d + 1);
  }
  return acc;
}

std::string Poly3::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    auto [a, b, d] = k;
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (a) s += "*x^" + std::to_string(a);
    if (b) s += "*y^" + std::to_string(b);
    if (d) s += "*z^" + std::to_string(d);
  }
  return s;
}

std::vector<Poly3> harmonic_components(const Poly3& p) {
  const int d = p.total_degree();
  Poly3 lap = p.laplacian();
  if (lap.is_zero()) return {p};
  // lap decomposes as sum r^{2i} u_{d-2-2i}; dividing u_{d-2j} by
  // 2j(2d-2j+1) (j = i+1) recovers the lower components of p.
  std::vector<Poly3> sub = harmonic_components(lap);
  std::vector<Poly3> comps(sub.size() + 1);
  Poly3 rest;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const int j = static_cast<int>(i) + 1;
    comps[j] = sub[i] * (Rational(1) / Rational(2 * j * (2 * d - 2 * j + 1)));
    rest += comps[j].times_r2(j);
  }
  comps[0] = p - rest;
  return comps;
}

Poly3 harmonic_projection(const Poly3& p) { return harmonic_components(p)[0]; }

}  // namespace sv
