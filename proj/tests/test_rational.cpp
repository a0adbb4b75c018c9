#include <cmath>

#include "doctest.h"
#include "hyperseries/rational.hpp"
#include "hyperseries/core.hpp"
#include "oracles.hpp"

using namespace hyperseries;

TEST_CASE("bigint basic arithmetic") {
  CHECK(BigInt(123).to_string() == "123");
  CHECK((BigInt(-5) + BigInt(7)).to_string() == "2");
  CHECK((BigInt(1000000007LL) * BigInt(998244353LL)).to_string() ==
        "998244359987710471");
  CHECK(BigInt::from_string("-12345678901234567890123456789").to_string() ==
        "-12345678901234567890123456789");
}

TEST_CASE("bigint division reconstructs operands") {
  oracles::Rng rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    BigInt a(1), b(1);
    int la = (int)rng.range(1, 7), lb = (int)rng.range(1, 5);
    for (int i = 0; i < la; ++i) a = a * BigInt((long long)rng.next() % 1000000007LL + 2);
    for (int i = 0; i < lb; ++i) b = b * BigInt((long long)rng.next() % 1000003LL + 2);
    if (rng.range(0, 1)) a = a.negated();
    if (rng.range(0, 1)) b = b.negated();
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs() + BigInt(1));
    bool r_small = r.abs() < b.abs();
    CHECK(r_small);
  }
}

TEST_CASE("bigint gcd") {
  BigInt a = BigInt(2 * 3 * 5 * 7) * BigInt(1000000007LL);
  BigInt b = BigInt(3 * 5 * 11) * BigInt(1000000007LL);
  CHECK(BigInt::gcd(a, b) == BigInt(15) * BigInt(1000000007LL));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-6)) == BigInt(6));
}

TEST_CASE("rational normalization and arithmetic") {
  Rational r(6, -8);
  CHECK(r.to_string() == "-3/4");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(1, 7) / Rational(2, 7)) == Rational(1, 2));
  CHECK(Rational(5, 1).is_integer());
  CHECK(Rational(-3).is_nonpositive_integer());
  CHECK(Rational(-3).nonpositive_integer_magnitude() == 3);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(Rational::from_string("-2/6") == Rational(-1, 3));
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational::looks_rational("1/3"));
  CHECK(Rational::looks_rational("-7"));
  CHECK_FALSE(Rational::looks_rational("0.25"));
  CHECK_FALSE(Rational::looks_rational("1/"));
}

TEST_CASE("rational to_double is accurate for large operands") {
  // (7^40) / (2 * 7^40 + 1) is close to 1/2
  BigInt seven_pow(1);
  for (int i = 0; i < 40; ++i) seven_pow = seven_pow * BigInt(7);
  Rational big(seven_pow, BigInt(2) * seven_pow + BigInt(1));
  CHECK(std::abs(big.to_double() - 0.5) < 1e-15);
  Rational third(1, 3);
  CHECK(std::abs(third.to_double() - 1.0 / 3.0) < 1e-17);
}

TEST_CASE("pochhammer_rational") {
  CHECK(pochhammer_rational(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer_rational(Rational(9, 5), 0) == Rational(1));
  CHECK(pochhammer_rational(Rational(-2), 3) == Rational(0));
  // reflection consistency: (l)_{-n} (l-n)_n = 1
  oracles::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Rational l = rng.rational();
    long n = rng.range(1, 6);
    bool pole = false;
    for (long t = 1; t <= n; ++t)
      if ((l - Rational(t)).is_zero()) pole = true;
    if (pole) continue;
    CHECK(pochhammer_rational(l, -n) * pochhammer_rational(l - Rational(n), n) ==
          Rational(1));
  }
}
