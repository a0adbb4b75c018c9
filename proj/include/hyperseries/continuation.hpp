#pragma once

#include <map>
#include <string>
#include <utility>

#include "hyperseries/pfq.hpp"
#include "hyperseries/rational.hpp"
#include "hyperseries/symbolic.hpp"  // Variant

namespace hyperseries {

/// Parameter bundle for the 3F2 continuation formulas. Gamma-argument
/// conditions are checked per formula at call time, not at construction.
struct ClausenSpec {
  Complex a1, a2, a3, b1, b2;
  ClausenSpec(Complex a1_, Complex a2_, Complex a3_, Complex b1_, Complex b2_);
  HyperSpec as_hyper() const { return HyperSpec({a1, a2, a3}, {b1, b2}); }
};

enum class Formula {
  Direct,           // series summation
  Gauss58,          // Gauss-function inverse-argument continuation
  Eq52,             // F2 pair at (1, 1/x)
  Eq53,             // F2 pair at (x/(x-1), 1/(1-x))
  Eq54,             // F2 pair at (x, 1)
  Eq55,             // KdF at (x, 1-x) plus H2 at (x/(x-1), x-1)
  Ref15,            // near-unit-argument reference expansion
  ExpansionSeries,  // order-lowering outer sum with continued Gauss inner
};

std::string formula_name(Formula f);

struct ContinuationReport {
  Complex value{0.0, 0.0};
  Formula formula = Formula::Direct;
  Variant variant = Variant::Corrected;
  std::map<std::string, double> residuals;
};

/// Inverse-argument continuation of the Gauss function (|x| > 1, a - b not
/// an integer).
Complex gauss_continuation(const Complex& a, const Complex& b, const Complex& c,
                           const Complex& x);

struct TheoremCoefficients {
  Complex A1, A2, B1, B2;
};

/// The four gamma-ratio coefficients of the continuation theorem; throws
/// DegenerateParameters naming the first ratio whose gamma argument sits at
/// a pole.
TheoremCoefficients theorem_coefficients(const ClausenSpec& spec);

/// One continuation formula at x. Boundary double-series failures surface as
/// NonConvergenceError; the report carries a direct-series residual whenever
/// the series converges at x.
ContinuationReport continue_3f2(const ClausenSpec& spec, const Complex& x,
                                Formula formula,
                                Variant variant = Variant::Corrected,
                                double tol = 1e-10);

enum class Ref15Variant {
  AsPrinted,        // regular part summed without the (1-x)^n factor
  RegularPowers,    // (1-x)^n inserted in the regular part
};

/// Near-unit-argument reference expansion, truncated at outer_terms.
Complex reference_continuation(const ClausenSpec& spec, double x, long outer_terms,
                               Ref15Variant variant = Ref15Variant::AsPrinted);

/// Terminating balanced 3F2(1) closed form (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
Rational saalschutz_value(const Rational& a, const Rational& b, const Rational& c,
                          long n);

/// Both sides of the alternating-argument sum derived from the balanced
/// closed form. Corrected pairs the expansion on the (b, c) slot so every
/// inner function terminates; AsPrinted reproduces the printed coefficients.
std::pair<Complex, Complex> saalschutz_series_check(const Complex& a,
                                                    const Complex& b,
                                                    const Complex& c, long n,
                                                    long outer_terms,
                                                    Variant variant = Variant::Corrected);

/// Region-dispatching 3F2 evaluator: direct series inside the disk, the
/// reference expansion near 1, continuation formulas elsewhere.
ContinuationReport eval_3f2_anywhere(const ClausenSpec& spec, const Complex& x,
                                     double tol = 1e-10);

}  // namespace hyperseries
