#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperseries {

using Complex = std::complex<double>;

class Rational;

// ------------------------------------------------------------------ errors

struct HsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleError : HsError {
  using HsError::HsError;
};
struct DomainError : HsError {
  using HsError::HsError;
};
struct OverflowError : HsError {
  using HsError::HsError;
};
struct DegenerateParameters : HsError {
  using HsError::HsError;
};
struct SingularIntegrand : HsError {
  using HsError::HsError;
};
// Thrown only by operations whose result type has no converged flag.
struct NonConvergenceError : HsError {
  using HsError::HsError;
};

inline void require_finite(const Complex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(what) + ": non-finite component");
}

inline bool is_nonpositive_integer(const Complex& z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

inline bool is_integer_valued(const Complex& z, double tol = 1e-12) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

// ------------------------------------------------------------- pochhammer

/// Rising factorial (lambda)_n for signed n. Negative n uses the reflection
/// (lambda)_{-k} = 1 / ((lambda-1)(lambda-2)...(lambda-k)).
Complex pochhammer(const Complex& lambda, long n);
Rational pochhammer_rational(const Rational& lambda, long n);

// ------------------------------------------------------------------ gamma

/// log |Gamma(x)| and the sign of Gamma(x) for real non-pole x.
void lgamma_signed(double x, double& log_abs, int& sign);

/// Principal-ish log Gamma for complex z (imaginary part may differ from the
/// principal branch by multiples of 2*pi; callers only exponentiate sums).
Complex lgamma_complex(Complex z);

/// prod Gamma(num_i) / prod Gamma(den_j), evaluated in log space.
Complex gamma_ratio(const std::vector<Complex>& numerators,
                    const std::vector<Complex>& denominators);

double gamma_real(double x);

// ----------------------------------------------------------------- series

struct SeriesResult {
  Complex value{0.0, 0.0};
  long terms_used = 0;
  // Bound on the omitted tail relative to 1 + |value|.
  double tail_estimate = 0.0;
  bool converged = false;
};

/// Neumaier compensated accumulator for complex terms.
class CompensatedSum {
 public:
  void add(const Complex& t) {
    add_part(re_, ce_, t.real());
    add_part(im_, ci_, t.imag());
  }
  Complex value() const { return {re_ + ce_, im_ + ci_}; }

 private:
  static void add_part(double& s, double& c, double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  double re_ = 0, ce_ = 0, im_ = 0, ci_ = 0;
};

/// Sums terms produced by next_term(m) for m = 0,1,2,... with compensated
/// accumulation. Stops after a run of 3 consecutive terms of magnitude below
/// tol * (1 + |partial sum|); hits of the max_terms cap are reported through
/// converged = false, never thrown.
template <class Gen>
SeriesResult accumulate_series(Gen&& next_term, double tol, long max_terms) {
  if (!(tol > 0)) throw DomainError("accumulate_series: tol must be positive");
  if (max_terms <= 0) throw DomainError("accumulate_series: max_terms must be positive");
  CompensatedSum acc;
  SeriesResult res;
  int small_run = 0;
  double run_max = 0.0;
  for (long m = 0; m < max_terms; ++m) {
    Complex t = next_term(m);
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw OverflowError("accumulate_series: non-finite term");
    acc.add(t);
    res.terms_used = m + 1;
    double mag = std::abs(t);
    double scale = 1.0 + std::abs(acc.value());
    if (mag < tol * scale) {
      run_max = std::max(run_max, mag);
      if (++small_run >= 3) {
        res.value = acc.value();
        res.tail_estimate = run_max / (1.0 + std::abs(res.value));
        res.converged = true;
        return res;
      }
    } else {
      small_run = 0;
      run_max = 0.0;
    }
  }
  res.value = acc.value();
  double scale = 1.0 + std::abs(res.value);
  res.tail_estimate = run_max > 0 ? run_max / scale : 1.0;
  res.converged = false;
  return res;
}

}  // namespace hyperseries
