#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperseries {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Only the operations the exact-rational layer needs are provided.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }
  int signum() const { return sign_; }

  BigInt abs() const;
  BigInt negated() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated division: a = q*b + r with |r| < |b| and sign(r) == sign(a).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);  // always >= 0

  void shift_left_bits(unsigned k);
  void shift_right_bits(unsigned k);
  size_t bit_length() const;
  unsigned trailing_zero_bits() const;

  bool fits_longlong() const;
  long long to_longlong() const;  // valid only if fits_longlong()

  std::string to_string() const;
  double to_double() const;
  // Mantissa/exponent split: value == mantissa * 2^exp with 0.5 <= |mantissa| < 1.
  void to_double_exp(double& mantissa, long& exp) const;

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian, no leading zero limbs

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);
  Rational(BigInt n, BigInt d);

  // Accepts "p", "-p", "p/q"; throws DomainError on anything else.
  static Rational from_string(const std::string& s);
  static bool looks_rational(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const;
  bool is_nonpositive_integer() const;
  // For nonpositive integers that fit a machine word: returns -value (>= 0).
  long long nonpositive_integer_magnitude() const;

  Rational abs() const;
  Rational negated() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string to_string() const;  // "p" or "p/q"
  double to_double() const;

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace hyperseries
