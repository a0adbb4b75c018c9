#include "hyperseries/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperseries/core.hpp"

namespace hyperseries {

// ---------------------------------------------------------------- BigInt ---

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long u = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
  while (u) {
    mag_.push_back((uint32_t)(u & 0xffffffffULL));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.mag_.size() != b.mag_.size())
    return a.mag_.size() < b.mag_.size() ? -1 : 1;
  for (size_t i = a.mag_.size(); i-- > 0;) {
    if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& big = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t>& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(big.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
    r[i] = (uint32_t)s;
    carry = s >> 32;
  }
  r[big.size()] = (uint32_t)carry;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
    if (s < 0) {
      s += (int64_t)1 << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = (uint32_t)s;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::negated() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      r.sign_ = b.sign_;
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (size_t i = 0; i < a.mag_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a.mag_[i];
    for (size_t j = 0; j < b.mag_.size(); ++j) {
      uint64_t s = (uint64_t)r.mag_[i + j] + ai * b.mag_[j] + carry;
      r.mag_[i + j] = (uint32_t)s;
      carry = s >> 32;
    }
    size_t k = i + b.mag_.size();
    while (carry) {
      uint64_t s = (uint64_t)r.mag_[k] + carry;
      r.mag_[k] = (uint32_t)s;
      carry = s >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

size_t BigInt::bit_length() const {
  if (mag_.empty()) return 0;
  size_t bits = (mag_.size() - 1) * 32;
  uint32_t top = mag_.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

unsigned BigInt::trailing_zero_bits() const {
  if (mag_.empty()) return 0;
  unsigned k = 0;
  for (size_t i = 0; i < mag_.size(); ++i) {
    if (mag_[i] == 0) {
      k += 32;
    } else {
      uint32_t v = mag_[i];
      while (!(v & 1)) {
        ++k;
        v >>= 1;
      }
      break;
    }
  }
  return k;
}

void BigInt::shift_left_bits(unsigned k) {
  if (sign_ == 0 || k == 0) return;
  unsigned limbs = k / 32, bits = k % 32;
  if (bits) {
    uint32_t carry = 0;
    for (size_t i = 0; i < mag_.size(); ++i) {
      uint32_t nv = (mag_[i] << bits) | carry;
      carry = mag_[i] >> (32 - bits);
      mag_[i] = nv;
    }
    if (carry) mag_.push_back(carry);
  }
  if (limbs) mag_.insert(mag_.begin(), limbs, 0);
}

void BigInt::shift_right_bits(unsigned k) {
  if (sign_ == 0 || k == 0) return;
  unsigned limbs = k / 32, bits = k % 32;
  if (limbs >= mag_.size()) {
    mag_.clear();
    sign_ = 0;
    return;
  }
  mag_.erase(mag_.begin(), mag_.begin() + limbs);
  if (bits) {
    for (size_t i = 0; i < mag_.size(); ++i) {
      uint32_t hi = (i + 1 < mag_.size()) ? mag_[i + 1] : 0;
      mag_[i] = (mag_[i] >> bits) | (hi << (32 - bits));
    }
  }
  trim();
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw DomainError("BigInt division by zero");
  int c = cmp_mag(a, b);
  if (a.sign_ == 0 || c < 0) {
    q = BigInt();
    r = a;
    return;
  }
  if (b.mag_.size() == 1) {
    uint64_t d = b.mag_[0];
    std::vector<uint32_t> qm(a.mag_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.mag_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a.mag_[i];
      qm[i] = (uint32_t)(cur / d);
      rem = cur % d;
    }
    q = BigInt();
    q.mag_ = std::move(qm);
    q.sign_ = 1;
    q.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r = BigInt((long long)rem);
    if (a.sign_ < 0) r.sign_ = -r.sign_;
    return;
  }

  // Normalize so the top divisor limb has its high bit set.
  unsigned shift = 0;
  uint32_t top = b.mag_.back();
  while (!(top & 0x80000000u)) {
    top <<= 1;
    ++shift;
  }
  BigInt u = a.abs(), v = b.abs();
  u.shift_left_bits(shift);
  v.shift_left_bits(shift);
  size_t n = v.mag_.size(), m = u.mag_.size() - n;
  u.mag_.push_back(0);

  std::vector<uint32_t> qm(m + 1, 0);
  const uint64_t base = 1ULL << 32;
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = ((uint64_t)u.mag_[j + n] << 32) | u.mag_[j + n - 1];
    uint64_t qhat = num / v.mag_[n - 1];
    uint64_t rhat = num % v.mag_[n - 1];
    while (qhat >= base ||
           qhat * v.mag_[n - 2] > ((rhat << 32) | u.mag_[j + n - 2])) {
      --qhat;
      rhat += v.mag_[n - 1];
      if (rhat >= base) break;
    }
    // Multiply-subtract qhat*v from u[j..j+n].
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v.mag_[i] + carry;
      carry = p >> 32;
      int64_t t = (int64_t)u.mag_[i + j] - (int64_t)(uint32_t)p - borrow;
      if (t < 0) {
        t += (int64_t)base;
        borrow = 1;
      } else {
        borrow = 0;
      }
      u.mag_[i + j] = (uint32_t)t;
    }
    int64_t t = (int64_t)u.mag_[j + n] - (int64_t)carry - borrow;
    if (t < 0) {
      // qhat was one too large: add back.
      t += (int64_t)base;
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = (uint64_t)u.mag_[i + j] + v.mag_[i] + c2;
        u.mag_[i + j] = (uint32_t)s;
        c2 = s >> 32;
      }
      t += (int64_t)c2;
    }
    u.mag_[j + n] = (uint32_t)t;
    qm[j] = (uint32_t)qhat;
  }

  q = BigInt();
  q.mag_ = std::move(qm);
  q.sign_ = 1;
  q.trim();
  if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;

  u.mag_.resize(n);
  u.sign_ = 1;
  u.trim();
  u.shift_right_bits(shift);
  if (!u.mag_.empty()) u.sign_ = a.sign_;
  r = std::move(u);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a, b);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

// Binary (Stein) gcd: no divisions, magnitudes only.
BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  unsigned za = a.trailing_zero_bits(), zb = b.trailing_zero_bits();
  unsigned shift = std::min(za, zb);
  a.shift_right_bits(za);
  b.shift_right_bits(zb);
  while (true) {
    int c = cmp_mag(a, b);
    if (c == 0) break;
    if (c < 0) std::swap(a, b);
    a.mag_ = sub_mag(a.mag_, b.mag_);
    a.trim();
    if (a.is_zero()) {
      a = b;
      break;
    }
    a.sign_ = 1;
    a.shift_right_bits(a.trailing_zero_bits());
  }
  a.shift_left_bits(shift);
  return a;
}

bool BigInt::fits_longlong() const { return bit_length() <= 62; }

long long BigInt::to_longlong() const {
  long long v = 0;
  for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
  return sign_ < 0 ? -v : v;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  BigInt t = abs();
  std::string digits;
  BigInt ten(10), q, r;
  while (!t.is_zero()) {
    BigInt::divmod(t, ten, q, r);
    digits.push_back(char('0' + (r.is_zero() ? 0 : r.mag_[0])));
    t = q;
  }
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(const std::string& s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw DomainError("empty integer literal");
  BigInt r;
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("bad integer literal: " + s);
    r = r * ten + BigInt(s[i] - '0');
  }
  if (sign < 0) r.sign_ = -r.sign_;
  return r;
}

void BigInt::to_double_exp(double& mantissa, long& exp) const {
  if (sign_ == 0) {
    mantissa = 0.0;
    exp = 0;
    return;
  }
  size_t bits = bit_length();
  // Take the top (up to) 64 bits.
  uint64_t top = 0;
  long texp = 0;
  if (bits <= 64) {
    for (size_t i = mag_.size(); i-- > 0;) top = (top << 32) | mag_[i];
    texp = 0;
  } else {
    size_t drop = bits - 64;
    BigInt t = abs();
    t.shift_right_bits((unsigned)drop);
    for (size_t i = t.mag_.size(); i-- > 0;) top = (top << 32) | t.mag_[i];
    texp = (long)drop;
  }
  double m = (double)top;
  int e2 = 0;
  m = std::frexp(m, &e2);
  mantissa = sign_ < 0 ? -m : m;
  exp = texp + e2;
}

double BigInt::to_double() const {
  double m;
  long e;
  to_double_exp(m, e);
  return std::ldexp(m, (int)std::min<long>(e, 3000));
}

// -------------------------------------------------------------- Rational ---

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  if (den_.signum() < 0) {
    den_ = den_.negated();
    num_ = num_.negated();
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_.abs(), den_);
  if (!(g == BigInt(1))) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

bool Rational::is_nonpositive_integer() const {
  return is_integer() && num_.signum() <= 0;
}

long long Rational::nonpositive_integer_magnitude() const {
  if (!is_nonpositive_integer() || !num_.fits_longlong())
    throw DomainError("not a small nonpositive integer");
  return -num_.to_longlong();
}

Rational Rational::abs() const {
  Rational r = *this;
  r.num_ = r.num_.abs();
  return r;
}

Rational Rational::negated() const {
  Rational r = *this;
  r.num_ = r.num_.negated();
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  BigInt g = BigInt::gcd(a.den_, b.den_);
  BigInt da = a.den_ / g, db = b.den_ / g;
  return Rational(a.num_ * db + b.num_ * da, a.den_ * db);
}

Rational operator-(const Rational& a, const Rational& b) {
  return a + b.negated();
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-cancel first to keep the gcd work on small operands.
  BigInt g1 = BigInt::gcd(a.num_.abs(), b.den_);
  BigInt g2 = BigInt::gcd(b.num_.abs(), a.den_);
  Rational r;
  r.num_ = (a.num_ / g1) * (b.num_ / g2);
  r.den_ = (a.den_ / g2) * (b.den_ / g1);
  if (r.num_.is_zero()) r.den_ = BigInt(1);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw PoleError("rational division by zero");
  Rational inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  if (inv.den_.signum() < 0) {
    inv.den_ = inv.den_.negated();
    inv.num_ = inv.num_.negated();
  }
  return a * inv;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) < (b.num_ * a.den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
  double mn, md;
  long en, ed;
  num_.to_double_exp(mn, en);
  den_.to_double_exp(md, ed);
  if (mn == 0.0) return 0.0;
  long e = en - ed;
  if (e > 2000) e = 2000;
  if (e < -2000) e = -2000;
  return std::ldexp(mn / md, (int)e);
}

bool Rational::looks_rational(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

}  // namespace hyperseries
