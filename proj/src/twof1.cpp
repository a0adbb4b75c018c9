#include "hyperseries/twof1.hpp"

#include <cmath>

namespace hyperseries {

namespace {

bool nonpos_int(const Complex& z) { return is_nonpositive_integer(z); }

long terminating_deg(const Complex& a, const Complex& b) {
  long deg = -1;
  if (nonpos_int(a)) deg = (long)std::llround(-a.real());
  if (nonpos_int(b)) {
    long d = (long)std::llround(-b.real());
    if (deg < 0 || d < deg) deg = d;
  }
  return deg;
}

}  // namespace

Complex series_2f1(const Complex& a, const Complex& b, const Complex& c,
                   const Complex& z, double tol, long max_terms) {
  long deg = terminating_deg(a, b);
  if (deg < 0) {
    if (nonpos_int(c)) throw PoleError("series_2f1: c is a nonpositive integer");
    if (std::abs(z) >= 1.0)
      throw DomainError("series_2f1: |z| >= 1 and series does not terminate");
  } else if (nonpos_int(c)) {
    long pole_after = (long)std::llround(-c.real());
    if (deg > pole_after)
      throw PoleError("series_2f1: denominator pole before termination");
  }
  // A lower parameter left of the origin lets the terms revive after the
  // (c+m) factors change sign; never stop before the term ratio has fallen
  // below one for good.
  long revival_guard = 0;
  if (c.real() < 0.0) {
    double zr = std::abs(z);
    revival_guard = (long)std::ceil(-c.real() / std::max(1e-3, 1.0 - zr)) + 16;
  }
  CompensatedSum acc;
  Complex t{1.0, 0.0};
  long cap = deg >= 0 ? deg + 1 : max_terms;
  int small_run = 0;
  for (long m = 0;; ++m) {
    acc.add(t);
    if (deg >= 0 && m == deg) break;
    if (m + 1 >= cap) {
      if (deg < 0)
        throw NonConvergenceError("series_2f1: max_terms exhausted");
      break;
    }
    t *= (a + (double)m) * (b + (double)m) /
         ((c + (double)m) * Complex((double)(m + 1), 0.0)) * z;
    double mag = std::abs(t);
    if (!std::isfinite(mag)) throw OverflowError("series_2f1: term overflow");
    if (mag < tol * (1.0 + std::abs(acc.value())) && m >= revival_guard) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  return acc.value();
}

Complex eval_2f1(const Complex& a, const Complex& b, const Complex& c,
                 const Complex& z, double tol, long max_terms) {
  require_finite(z, "eval_2f1 z");
  if (nonpos_int(c) && terminating_deg(a, b) < 0)
    throw PoleError("eval_2f1: c is a nonpositive integer");
  if (z == Complex(0.0, 0.0)) return {1.0, 0.0};
  if (terminating_deg(a, b) >= 0) return series_2f1(a, b, c, z, tol, max_terms);

  double r = std::abs(z);
  if (r < 1.0 - 1e-12) {
    // Inside the disk. For arguments left of the origin a Pfaff map onto
    // w = z/(z-1) in (0,1) keeps the terms single-signed when the mapped
    // parameters allow it; otherwise fall back to the direct series.
    if (z.real() < 0.0) {
      Complex w = z / (z - 1.0);
      bool pfaff_a_ok = a.real() > 0.0 && (c - b).real() > 0.0;
      bool pfaff_b_ok = b.real() > 0.0 && (c - a).real() > 0.0;
      if (pfaff_a_ok)
        return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w, tol, max_terms);
      if (pfaff_b_ok)
        return std::pow(1.0 - z, -b) * series_2f1(b, c - a, c, w, tol, max_terms);
      // Euler map keeps the argument but flips both numerator parameters;
      // with z < 0 the products (c-a+m)(c-b+m) z^m stay single-signed when
      // both mapped parameters are very negative, which is the remaining
      // badly-cancelling case (large upper parameters).
      if ((c - a).real() < 0.0 && (c - b).real() < 0.0)
        return std::pow(1.0 - z, c - a - b) *
               series_2f1(c - a, c - b, c, z, tol, max_terms);
    }
    return series_2f1(a, b, c, z, tol, max_terms);
  }

  if (std::abs(z - Complex(1.0, 0.0)) < 1e-12) {
    // Gauss summation at the branch point, when absolutely convergent.
    if ((c - a - b).real() > 0.0)
      return gamma_ratio({c, c - a - b}, {c - a, c - b});
    throw DomainError("eval_2f1: z = 1 with Re(c-a-b) <= 0");
  }

  // |z| >= 1: inverse-argument continuation. A nonpositive-integer gamma
  // argument in a denominator kills that whole term (1/Gamma -> 0).
  if (!is_integer_valued(a - b)) {
    auto ratio_or_zero = [](std::vector<Complex> num, std::vector<Complex> den) {
      for (const Complex& d : den)
        if (is_nonpositive_integer(d)) return Complex(0.0, 0.0);
      return gamma_ratio(num, den);
    };
    Complex iz = 1.0 / z;
    Complex g1 = ratio_or_zero({c, b - a}, {b, c - a});
    Complex g2 = ratio_or_zero({c, a - b}, {a, c - b});
    Complex f1 = g1 == Complex(0.0, 0.0)
                     ? Complex(0.0, 0.0)
                     : g1 * std::pow(-z, -a) *
                           eval_2f1(a, 1.0 - c + a, 1.0 - b + a, iz, tol, max_terms);
    Complex f2 = g2 == Complex(0.0, 0.0)
                     ? Complex(0.0, 0.0)
                     : g2 * std::pow(-z, -b) *
                           eval_2f1(b, 1.0 - c + b, 1.0 - a + b, iz, tol, max_terms);
    return f1 + f2;
  }
  // Degenerate a-b: reachable for Re z < 1/2 through the Pfaff map.
  Complex w = z / (z - 1.0);
  if (std::abs(w) < 1.0 - 1e-12)
    return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w, tol, max_terms);
  throw DegenerateParameters("eval_2f1: a - b integral and |z| > 1");
}

}  // namespace hyperseries
