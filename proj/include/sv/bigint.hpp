#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sv {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs
/// (little endian). Sized for polynomial coefficient work: schoolbook
/// multiplication, long division, Euclidean gcd.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  /// Truncated division (quotient rounds toward zero).
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator<=(const BigInt& o) const { return !(o < *this); }
  bool operator>=(const BigInt& o) const { return !(*this < o); }

  static BigInt gcd(BigInt a, BigInt b);
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                     BigInt& rem);

  /// Floor of the square root; requires a nonnegative value.
  BigInt isqrt() const;
  bool is_perfect_square() const;

  BigInt pow(unsigned e) const;

  std::string to_string() const;
  double to_double() const;
  long double to_long_double() const;

  /// Exact conversion when the value fits, otherwise throws.
  std::int64_t to_int64() const;

 private:
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static BigInt add_magnitude(const BigInt& a, const BigInt& b);
  static BigInt sub_magnitude(const BigInt& a, const BigInt& b);  // |a| >= |b|
  void trim();

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;
};

}  // namespace sv
