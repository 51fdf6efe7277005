#include "sv/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace sv {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  // Avoid overflow on INT64_MIN by working in unsigned space.
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1
                                : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  r.negative_ = neg && !r.is_zero();
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_magnitude(const BigInt& a, const BigInt& b) {
  BigInt r;
  const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  r.limbs_.resize(n);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t sum = carry;
    if (i < a.limbs_.size()) sum += a.limbs_[i];
    if (i < b.limbs_.size()) sum += b.limbs_[i];
    r.limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

BigInt BigInt::sub_magnitude(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? b.limbs_[i] : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (negative_ == o.negative_) {
    BigInt r = add_magnitude(*this, o);
    r.negative_ = negative_ && !r.is_zero();
    return r;
  }
  const int c = compare_magnitude(*this, o);
  if (c == 0) return BigInt();
  BigInt r = c > 0 ? sub_magnitude(*this, o) : sub_magnitude(o, *this);
  r.negative_ = (c > 0 ? negative_ : o.negative_) && !r.is_zero();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                          carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  r.negative_ = negative_ != o.negative_;
  return r;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                    BigInt& rem) {
  if (den.is_zero()) throw std::domain_error("BigInt: division by zero");
  // Magnitude long division, bit by bit from the top.
  BigInt n = num.abs();
  BigInt d = den.abs();
  quot = BigInt();
  rem = BigInt();
  if (compare_magnitude(n, d) < 0) {
    rem = n;
  } else {
    const std::size_t bits = n.limbs_.size() * 32;
    quot.limbs_.assign(n.limbs_.size(), 0);
    for (std::size_t b = bits; b-- > 0;) {
      // rem = rem*2 + bit b of n
      std::uint32_t carry = 0;
      for (std::size_t i = 0; i < rem.limbs_.size(); ++i) {
        std::uint32_t nxt = rem.limbs_[i] >> 31;
        rem.limbs_[i] = (rem.limbs_[i] << 1) | carry;
        carry = nxt;
      }
      if (carry) rem.limbs_.push_back(1);
      const std::uint32_t bit = (n.limbs_[b / 32] >> (b % 32)) & 1u;
      if (bit) {
        if (rem.limbs_.empty()) rem.limbs_.push_back(0);
        rem.limbs_[0] |= 1u;
      }
      if (compare_magnitude(rem, d) >= 0) {
        rem = sub_magnitude(rem, d);
        quot.limbs_[b / 32] |= 1u << (b % 32);
      }
    }
    quot.trim();
    rem.trim();
  }
  quot.negative_ = (num.negative_ != den.negative_) && !quot.is_zero();
  rem.negative_ = num.negative_ && !rem.is_zero();
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
  if (negative_ != o.negative_) return negative_;
  const int c = compare_magnitude(*this, o);
  return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::isqrt() const {
  if (negative_) throw std::domain_error("BigInt: isqrt of negative value");
  if (is_zero()) return BigInt();
  // Newton iteration on integers, seeded above the root.
  const std::size_t bits = limbs_.size() * 32;
  BigInt x = BigInt(1);
  for (std::size_t i = 0; i < bits / 2 + 2; ++i) x = x * BigInt(2);
  while (true) {
    BigInt y = (x + *this / x) / BigInt(2);
    if (y >= x) break;
    x = y;
  }
  return x;
}

bool BigInt::is_perfect_square() const {
  if (negative_) return false;
  BigInt r = isqrt();
  return r * r == *this;
}

BigInt BigInt::pow(unsigned e) const {
  BigInt base = *this;
  BigInt r(1);
  while (e != 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt n = abs();
  const BigInt chunk(1000000000);
  while (!n.is_zero()) {
    BigInt q, r;
    divmod(n, chunk, q, r);
    std::uint64_t part = 0;
    for (std::size_t i = r.limbs_.size(); i-- > 0;)
      part = (part << 32) | r.limbs_[i];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + part % 10));
      part /= 10;
    }
    n = q;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

long double BigInt::to_long_double() const {
  long double v = 0.0L;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    v = v * 4294967296.0L + static_cast<long double>(limbs_[i]);
  return negative_ ? -v : v;
}

double BigInt::to_double() const {
  return static_cast<double>(to_long_double());
}

std::int64_t BigInt::to_int64() const {
  if (limbs_.size() > 2)
    throw std::overflow_error("BigInt: does not fit in int64");
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  if (!negative_ && mag > static_cast<std::uint64_t>(INT64_MAX))
    throw std::overflow_error("BigInt: does not fit in int64");
  if (negative_ && mag > static_cast<std::uint64_t>(INT64_MAX) + 1)
    throw std::overflow_error("BigInt: does not fit in int64");
  return negative_ ? -static_cast<std::int64_t>(mag)
                   : static_cast<std::int64_t>(mag);
}

}  // namespace sv
