#include "hyperseries/continuation.hpp"

#include <cmath>

#include "hyperseries/multi_series.hpp"
#include "hyperseries/quadrature.hpp"
#include "hyperseries/twof1.hpp"

namespace hyperseries {

ClausenSpec::ClausenSpec(Complex a1_, Complex a2_, Complex a3_, Complex b1_,
                         Complex b2_)
    : a1(a1_), a2(a2_), a3(a3_), b1(b1_), b2(b2_) {
  require_finite(a1, "ClausenSpec a1");
  require_finite(a2, "ClausenSpec a2");
  require_finite(a3, "ClausenSpec a3");
  require_finite(b1, "ClausenSpec b1");
  require_finite(b2, "ClausenSpec b2");
  if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2))
    throw PoleError("ClausenSpec: denominator parameter at a pole");
}

std::string formula_name(Formula f) {
  switch (f) {
    case Formula::Direct: return "direct";
    case Formula::Gauss58: return "gauss";
    case Formula::Eq52: return "eq52";
    case Formula::Eq53: return "eq53";
    case Formula::Eq54: return "eq54";
    case Formula::Eq55: return "eq55";
    case Formula::Ref15: return "ref15";
    case Formula::ExpansionSeries: return "expansion";
  }
  return "?";
}

Complex gauss_continuation(const Complex& a, const Complex& b, const Complex& c,
                           const Complex& x) {
  require_finite(x, "gauss_continuation x");
  if (is_integer_valued(a - b))
    throw DegenerateParameters("gauss_continuation: a - b is an integer");
  if (std::abs(x) <= 1.0)
    throw DomainError("gauss_continuation: needs |x| > 1");
  Complex iz = 1.0 / x;
  Complex g1, g2;
  try {
    g1 = gamma_ratio({c, b - a}, {b, c - a});
    g2 = gamma_ratio({c, a - b}, {a, c - b});
  } catch (const PoleError& e) {
    throw DegenerateParameters(std::string("gauss_continuation: ") + e.what());
  }
  Complex t1 = g1 * std::pow(-x, -a) *
               eval_2f1(a, 1.0 - c + a, 1.0 - b + a, iz);
  Complex t2 = g2 * std::pow(-x, -b) *
               eval_2f1(b, 1.0 - c + b, 1.0 - a + b, iz);
  return t1 + t2;
}

TheoremCoefficients theorem_coefficients(const ClausenSpec& s) {
  TheoremCoefficients co;
  auto ratio = [](std::vector<Complex> num, std::vector<Complex> den,
                  const char* which) {
    try {
      return gamma_ratio(num, den);
    } catch (const PoleError& e) {
      throw DegenerateParameters(std::string(which) + ": " + e.what());
    }
  };
  co.A1 = ratio({s.b1, s.b1 - s.a1 - s.a2}, {s.b1 - s.a1, s.b1 - s.a2}, "A1");
  co.A2 = ratio({s.b1, s.a1 + s.a2 - s.b1}, {s.a1, s.a2}, "A2");
  co.B1 = ratio({s.b1, s.a2 - s.a1}, {s.a2, s.b1 - s.a1}, "B1");
  co.B2 = ratio({s.b1, s.a1 - s.a2}, {s.a1, s.b1 - s.a2}, "B2");
  return co;
}

namespace {

Complex coefficient_B1(const ClausenSpec& s) {
  try {
    return gamma_ratio({s.b1, s.a2 - s.a1}, {s.a2, s.b1 - s.a1});
  } catch (const PoleError& e) {
    throw DegenerateParameters(std::string("B1: ") + e.what());
  }
}

Complex coefficient_B2(const ClausenSpec& s) {
  try {
    return gamma_ratio({s.b1, s.a1 - s.a2}, {s.a1, s.b1 - s.a2});
  } catch (const PoleError& e) {
    throw DegenerateParameters(std::string("B2: ") + e.what());
  }
}

Complex f2_term(const AppellF2Spec& spec, const Complex& u, const Complex& v,
                double tol, const char* label) {
  SeriesResult r = eval_appell_f2(spec, u, v, tol, F2Strategy::IteratedInner2F1,
                                  60000);
  if (!r.converged)
    throw NonConvergenceError(std::string(label) +
                              ": boundary double series failed to converge");
  return r.value;
}

void fill_direct_residual(ContinuationReport& rep, const ClausenSpec& spec,
                          const Complex& x) {
  if (std::abs(x) >= 0.98) return;
  SeriesResult direct = eval_pfq(spec.as_hyper(), x, 1e-13, 400000);
  if (direct.converged)
    rep.residuals["direct"] =
        std::abs(rep.value - direct.value) / (1.0 + std::abs(direct.value));
}

// Order-lowering outer sum with each inner Gauss function continued; this is
// the pre-split form of the F2 continuation pair and converges geometrically
// for any x left of the branch cut.
Complex expansion_series_value(const ClausenSpec& s, const Complex& x,
                               double tol) {
  CompensatedSum acc;
  Complex coef{1.0, 0.0};
  int small_run = 0;
  for (long i = 0; i < 4000; ++i) {
    if (i > 0) {
      double im1 = (double)(i - 1);
      Complex r = -x / Complex((double)i, 0.0);
      r *= (s.a1 + im1) * (s.a2 + im1) * ((s.b2 - s.a3) + im1);
      r /= (s.b1 + im1) * (s.b2 + im1);
      coef *= r;
    }
    Complex inner = eval_2f1(s.a1 + (double)i, s.a2 + (double)i,
                             s.b1 + (double)i, x, std::max(tol * 1e-3, 1e-15));
    Complex term = coef * inner;
    acc.add(term);
    if (std::abs(term) < tol * (1.0 + std::abs(acc.value()))) {
      if (++small_run >= 3) return acc.value();
    } else {
      small_run = 0;
    }
  }
  throw NonConvergenceError("expansion series: outer terms failed to decay");
}

}  // namespace

ContinuationReport continue_3f2(const ClausenSpec& s, const Complex& x,
                                Formula formula, Variant variant, double tol) {
  require_finite(x, "continue_3f2 x");
  ContinuationReport rep;
  rep.formula = formula;
  rep.variant = variant;
  double f2tol = tol * 0.1;

  switch (formula) {
    case Formula::Direct: {
      SeriesResult r = eval_pfq(s.as_hyper(), x, tol, 400000);
      if (!r.converged) throw NonConvergenceError("direct series did not converge");
      rep.value = r.value;
      return rep;  // residual against itself is pointless
    }
    case Formula::Gauss58:
      throw DomainError("continue_3f2: the Gauss-function formula takes 2F1 parameters");
    case Formula::Eq52: {
      if (std::abs(x) <= 1.0)
        throw DomainError("eq52 needs |x| > 1");
      Complex B1 = coefficient_B1(s), B2 = coefficient_B2(s);
      Complex ix = 1.0 / x;
      AppellF2Spec f2a(s.a1, s.b2 - s.a3, 1.0 - s.b1 + s.a1, s.b2,
                       1.0 - s.a2 + s.a1);
      AppellF2Spec f2b(s.a2, s.b2 - s.a3, 1.0 - s.b1 + s.a2, s.b2,
                       1.0 - s.a1 + s.a2);
      rep.value = B1 * std::pow(-x, -s.a1) *
                      f2_term(f2a, {1.0, 0.0}, ix, f2tol, "eq52 first term") +
                  B2 * std::pow(-x, -s.a2) *
                      f2_term(f2b, {1.0, 0.0}, ix, f2tol, "eq52 second term");
      break;
    }
    case Formula::Eq53: {
      if (x.imag() != 0.0 || x.real() >= 0.5)
        throw DomainError("eq53 needs real x < 1/2");
      Complex B1 = coefficient_B1(s), B2 = coefficient_B2(s);
      Complex u = x / (x - 1.0), v = 1.0 / (1.0 - x);
      Complex c2_first = variant == Variant::AsPrinted ? 1.0 - s.a1 - s.a2
                                                       : 1.0 - s.a2 + s.a1;
      Complex c2_second = variant == Variant::AsPrinted ? 1.0 - s.a2 - s.a1
                                                        : 1.0 - s.a1 + s.a2;
      AppellF2Spec f2a(s.a1, s.b2 - s.a3, s.b1 - s.a2, s.b2, c2_first);
      AppellF2Spec f2b(s.a2, s.b2 - s.a3, s.b1 - s.a1, s.b2, c2_second);
      rep.value = B1 * std::pow(1.0 - x, -s.a1) *
                      f2_term(f2a, u, v, f2tol, "eq53 first term") +
                  B2 * std::pow(1.0 - x, -s.a2) *
                      f2_term(f2b, u, v, f2tol, "eq53 second term");
      break;
    }
    case Formula::Eq54: {
      if (x.imag() != 0.0 || x.real() >= 1.0)
        throw DomainError("eq54 needs real x < 1");
      Complex B1 = coefficient_B1(s), B2 = coefficient_B2(s);
      AppellF2Spec f2a(s.a1, s.a3, s.b1 - s.a2, s.b2, 1.0 - s.a2 + s.a1);
      AppellF2Spec f2b(s.a2, s.a3, s.b1 - s.a1, s.b2, 1.0 - s.a1 + s.a2);
      rep.value = B1 * f2_term(f2a, x, {1.0, 0.0}, f2tol, "eq54 first term") +
                  B2 * f2_term(f2b, x, {1.0, 0.0}, f2tol, "eq54 second term");
      break;
    }
    case Formula::Eq55: {
      if (x.imag() != 0.0 || x.real() >= 1.0)
        throw DomainError("eq55 needs real x < 1");
      TheoremCoefficients co = theorem_coefficients(s);
      KdFSpec kdf({s.a1, s.a2}, {s.b2 - s.a3}, {},
                  {1.0 + s.a1 + s.a2 - s.b1}, {s.b2}, {});
      // The boundary double series converges only power-law; a tighter
      // tolerance than ~1e-10 would need prohibitively many anti-diagonals.
      double kdf_tol = std::max(f2tol, 1e-10);
      SeriesResult kr = eval_kdf(kdf, x, 1.0 - x, kdf_tol, 40000000);
      if (!kr.converged)
        throw NonConvergenceError("eq55: double series part failed to converge");
      HornH2Spec h2(s.a1 + s.a2 - s.b1, s.b2 - s.a3, s.b1 - s.a1, s.b1 - s.a2,
                    s.b2);
      SeriesResult hr = eval_horn_h2(h2, x / (x - 1.0), x - 1.0, kdf_tol, 40000000);
      if (!hr.converged)
        throw NonConvergenceError("eq55: Horn part failed to converge");
      rep.value = co.A1 * kr.value +
                  co.A2 * std::pow(1.0 - x, s.b1 - s.a1 - s.a2) * hr.value;
      break;
    }
    case Formula::Ref15: {
      if (x.imag() != 0.0) throw DomainError("ref15 needs real x");
      rep.value = reference_continuation(s, x.real(), 4000);
      break;
    }
    case Formula::ExpansionSeries: {
      if (x.imag() == 0.0 && x.real() >= 1.0)
        throw DomainError("expansion series: branch cut at real x >= 1");
      rep.value = expansion_series_value(s, x, tol);
      break;
    }
  }
  fill_direct_residual(rep, s, x);
  return rep;
}

Complex reference_continuation(const ClausenSpec& s, double x, long outer_terms,
                               Ref15Variant variant) {
  if (!(x > 0.0 && x < 1.0))
    throw DomainError("reference_continuation: x must lie in (0, 1)");
  Complex w = s.b1 + s.b2 - s.a1 - s.a2 - s.a3;
  if (is_integer_valued(w))
    throw DegenerateParameters("reference_continuation: integral weight parameter");
  Complex pref1, pref2;
  try {
    pref1 = gamma_ratio({s.b1, s.b2, w}, {s.a1, w + s.a3, w + s.a2});
    pref2 = gamma_ratio({s.b1, s.b2, -w}, {s.a1, s.a2, s.a3});
  } catch (const PoleError& e) {
    throw DegenerateParameters(std::string("reference_continuation: ") + e.what());
  }

  double omx = 1.0 - x;
  Complex chi = -w;  // a1 + a2 + a3 - b1 - b2

  CompensatedSum regular;
  Complex coef{1.0, 0.0};
  int small = 0;
  for (long n = 0; n < outer_terms; ++n) {
    if (n > 0) {
      double nm1 = (double)(n - 1);
      Complex r = ((s.b1 - s.a1) + nm1) * ((s.b2 - s.a1) + nm1) * (w + nm1) /
                  (((w + s.a3) + nm1) * ((w + s.a2) + nm1) * (double)n);
      if (variant == Ref15Variant::RegularPowers) r *= omx;
      coef *= r;
    }
    Complex inner = eval_2f1(s.a2, s.a3, chi + 1.0 - (double)n, omx, 1e-14);
    Complex term = coef * inner;
    regular.add(term);
    if (std::abs(term) < 1e-15 * (1.0 + std::abs(regular.value()))) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }

  CompensatedSum singular;
  Complex scoef{1.0, 0.0};
  double ratio_arg = (x - 1.0) / x;
  small = 0;
  for (long n = 0; n < outer_terms; ++n) {
    if (n > 0) {
      double nm1 = (double)(n - 1);
      Complex r = ((s.b1 - s.a1) + nm1) * ((s.b2 - s.a1) + nm1) /
                  ((w + 1.0 + nm1) * (double)n) * ratio_arg;
      scoef *= r;
    }
    Complex inner =
        eval_2f1(1.0 - s.a2, 1.0 - s.a3, w + 1.0 + (double)n, omx, 1e-14);
    Complex term = scoef * inner;
    singular.add(term);
    if (std::abs(term) < 1e-15 * (1.0 + std::abs(singular.value()))) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }

  Complex xi_part = pref2 * std::pow(Complex(x, 0.0), s.a1 - s.b1 - s.b2 + 1.0) *
                    std::pow(Complex(omx, 0.0), w) * singular.value();
  return pref1 * regular.value() + xi_part;
}

Rational saalschutz_value(const Rational& a, const Rational& b, const Rational& c,
                          long n) {
  if (n < 1) throw DomainError("saalschutz_value: n must be positive");
  Rational den = pochhammer_rational(c, n) * pochhammer_rational(c - a - b, n);
  if (den.is_zero()) throw PoleError("saalschutz_value: pole in (c)_n (c-a-b)_n");
  return pochhammer_rational(c - a, n) * pochhammer_rational(c - b, n) / den;
}

namespace {

// Terminating 3F2 at -1 summed term by term; degree caps the sum before any
// denominator factor can vanish.
Complex terminating_3f2_neg1(const Complex& u1, const Complex& u2,
                             const Complex& u3, const Complex& l1,
                             const Complex& l2, long degree) {
  CompensatedSum acc;
  Complex t{1.0, 0.0};
  for (long m = 0; m <= degree; ++m) {
    acc.add(t);
    if (m == degree) break;
    Complex den = (l1 + (double)m) * (l2 + (double)m) * (double)(m + 1);
    if (std::abs(den) == 0.0)
      throw PoleError("saalschutz_series_check: inner denominator pole");
    t *= -(u1 + (double)m) * (u2 + (double)m) * (u3 + (double)m) / den;
  }
  return acc.value();
}

}  // namespace

std::pair<Complex, Complex> saalschutz_series_check(const Complex& a,
                                                    const Complex& b,
                                                    const Complex& c, long n,
                                                    long outer_terms,
                                                    Variant variant) {
  if (n < 1) throw DomainError("saalschutz_series_check: n must be positive");
  Complex beta2 = 1.0 + a + b - c - (double)n;
  Complex rhs = pochhammer(c - a, n) * pochhammer(c - b, n) /
                (pochhammer(c, n) * pochhammer(c - a - b, n));

  CompensatedSum lhs;
  if (variant == Variant::Corrected) {
    // Expansion paired on the (b, c) slot: the outer sum terminates at n and
    // every inner function terminates at n - j.
    Complex coef{1.0, 0.0};
    long jmax = std::min((long)n, outer_terms - 1);
    for (long j = 0; j <= jmax; ++j) {
      if (j > 0) {
        double jm1 = (double)(j - 1);
        Complex den = (beta2 + jm1) * (double)j;
        if (std::abs(den) == 0.0)
          throw PoleError("saalschutz_series_check: outer denominator pole");
        coef *= (a + jm1) * (Complex((double)-n, 0.0) + jm1) / den;
      }
      Complex inner = terminating_3f2_neg1(a + (double)j, (double)(j - n), c - b,
                                           beta2 + (double)j, c, n - j);
      lhs.add(coef * inner);
    }
  } else {
    // Printed coefficients; only meaningful when the inner functions
    // terminate on their own (1 + a + b - c a nonpositive integer).
    Complex third = 1.0 + a + b - c;
    if (!is_nonpositive_integer(third))
      throw NonConvergenceError(
          "saalschutz_series_check printed form: inner functions diverge at -1");
    long inner_deg = (long)std::llround(-third.real());
    Complex coef{1.0, 0.0};
    for (long j = 0; j < outer_terms; ++j) {
      if (j > 0) {
        double jm1 = (double)(j - 1);
        coef *= (a + jm1) * (b + jm1) / ((c + jm1) * (double)j);
      }
      Complex inner = terminating_3f2_neg1(a + (double)j, b + (double)j, third,
                                           c + (double)j, beta2, inner_deg);
      lhs.add(coef * inner);
      if (std::abs(coef * inner) < 1e-12 * (1.0 + std::abs(lhs.value()))) break;
    }
  }
  return {lhs.value(), rhs};
}

ContinuationReport eval_3f2_anywhere(const ClausenSpec& spec, const Complex& x,
                                     double tol) {
  require_finite(x, "eval_3f2_anywhere x");
  double r = std::abs(x);
  bool realx = x.imag() == 0.0;

  if (realx && std::abs(x.real() - 1.0) < 1e-12)
    throw DomainError("eval_3f2_anywhere: branch point at x = 1");

  if (r < 0.75) {
    ContinuationReport rep;
    rep.formula = Formula::Direct;
    SeriesResult sr = eval_pfq(spec.as_hyper(), x, tol, 400000);
    if (!sr.converged)
      throw NonConvergenceError("eval_3f2_anywhere: direct series stalled");
    rep.value = sr.value;
    return rep;
  }

  if (realx && x.real() > 0.0 && x.real() < 1.0) {
    // Near-unit band: the reference expansion converges like n^{-1-Re a1},
    // so it is only trustworthy when validated against the series, which
    // still converges here.
    ContinuationReport rep;
    SeriesResult direct = eval_pfq(spec.as_hyper(), x, 1e-12, 2000000);
    Complex ref;
    bool ref_ok = false;
    try {
      ref = reference_continuation(spec, x.real(), 6000);
      ref_ok = true;
    } catch (const HsError&) {
    }
    if (ref_ok && direct.converged) {
      double resid = std::abs(ref - direct.value) / (1.0 + std::abs(direct.value));
      if (resid < 100.0 * tol) {
        rep.formula = Formula::Ref15;
        rep.value = ref;
        rep.residuals["direct"] = resid;
        return rep;
      }
    }
    if (!direct.converged)
      throw NonConvergenceError("eval_3f2_anywhere: series stalled near 1");
    rep.formula = Formula::Direct;
    rep.value = direct.value;
    return rep;
  }

  if (realx && x.real() > 1.0)
    throw DomainError("eval_3f2_anywhere: real x > 1 lies on the branch cut");

  // Left of the disk (or complex with |x| > 1): prefer the F2-pair formula
  // where its boundary sums converge, fall back to the pre-split expansion.
  ContinuationReport rep;
  bool have = false;
  if (realx && x.real() <= -0.75) {
    try {
      rep = continue_3f2(spec, x, Formula::Eq53, Variant::Corrected, tol);
      have = true;
    } catch (const NonConvergenceError&) {
    } catch (const DegenerateParameters&) {
    }
  }
  if (!have && r > 1.25) {
    try {
      rep = continue_3f2(spec, x, Formula::Eq52, Variant::Corrected, tol);
      have = true;
    } catch (const NonConvergenceError&) {
    } catch (const DegenerateParameters&) {
    }
  }
  if (!have)
    rep = continue_3f2(spec, x, Formula::ExpansionSeries, Variant::Corrected, tol);
  // Quadrature cross-check where the integral representation applies.
  if (realx && spec.a1.imag() == 0.0 && spec.a1.real() > 0.0 &&
      x.real() < 0.9) {
    try {
      QuadratureRule rule = build_rule(RuleKind::GaussLaguerre, 60);
      Complex q = clausen_via_1d_integral(spec.as_hyper(), x, rule);
      rep.residuals["quad1d"] =
          std::abs(rep.value - q) / (1.0 + std::abs(q));
    } catch (const HsError&) {
    }
  }
  return rep;
}

}  // namespace hyperseries
