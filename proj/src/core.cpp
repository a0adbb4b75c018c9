#include "hyperseries/core.hpp"

#include "hyperseries/rational.hpp"

namespace hyperseries {

Complex pochhammer(const Complex& lambda, long n) {
  if (n == 0) return {1.0, 0.0};
  if (n > 0) {
    Complex p{1.0, 0.0};
    for (long k = 0; k < n; ++k) p *= lambda + Complex((double)k, 0.0);
    return p;
  }
  // (lambda)_{-k} = 1 / ((lambda-1)(lambda-2)...(lambda-k))
  long k = -n;
  Complex d{1.0, 0.0};
  for (long t = 1; t <= k; ++t) {
    Complex f = lambda - Complex((double)t, 0.0);
    if (std::abs(f) == 0.0)
      throw PoleError("pochhammer: reflection pole at lambda - " +
                      std::to_string(t));
    d *= f;
  }
  return Complex(1.0, 0.0) / d;
}

Rational pochhammer_rational(const Rational& lambda, long n) {
  if (n == 0) return Rational(1);
  if (n > 0) {
    Rational p(1);
    for (long k = 0; k < n; ++k) p *= lambda + Rational(k);
    return p;
  }
  long k = -n;
  Rational d(1);
  for (long t = 1; t <= k; ++t) {
    Rational f = lambda - Rational(t);
    if (f.is_zero())
      throw PoleError("pochhammer_rational: reflection pole at lambda - " +
                      std::to_string(t));
    d *= f;
  }
  return Rational(1) / d;
}

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's table).
namespace {
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

Complex lanczos_lgamma_right(Complex z) {
  // valid for Re z >= 0.5
  Complex x = z - 1.0;
  Complex ser(kLanczos[0], 0.0);
  for (int k = 1; k < 15; ++k) ser += kLanczos[k] / (x + (double)k);
  Complex t = x + kLanczosG + 0.5;
  return kHalfLog2Pi + (x + 0.5) * std::log(t) - t + std::log(ser);
}
}  // namespace

Complex lgamma_complex(Complex z) {
  if (is_nonpositive_integer(z))
    throw PoleError("lgamma_complex: pole at nonpositive integer");
  if (z.real() >= 0.5) return lanczos_lgamma_right(z);
  // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
  Complex s = std::sin(M_PI * z);
  return std::log(M_PI) - std::log(s) - lanczos_lgamma_right(1.0 - z);
}

void lgamma_signed(double x, double& log_abs, int& sign) {
  if (x > 0) {
    log_abs = std::lgamma(x);
    sign = 1;
    return;
  }
  double r = std::round(x);
  if (std::abs(x - r) < 1e-300)
    throw PoleError("lgamma_signed: pole at nonpositive integer");
  log_abs = std::lgamma(x);
  long long fl = (long long)std::floor(x);
  sign = (fl % 2 == 0) ? 1 : -1;
}

double gamma_real(double x) {
  double l;
  int s;
  lgamma_signed(x, l, s);
  return s * std::exp(l);
}

Complex gamma_ratio(const std::vector<Complex>& numerators,
                    const std::vector<Complex>& denominators) {
  for (const Complex& z : numerators) {
    require_finite(z, "gamma_ratio numerator");
    if (is_nonpositive_integer(z))
      throw PoleError("gamma_ratio: gamma pole in numerator (infinite coefficient)");
  }
  for (const Complex& z : denominators) {
    require_finite(z, "gamma_ratio denominator");
    if (is_nonpositive_integer(z))
      throw PoleError("gamma_ratio: gamma pole in denominator");
  }

  bool all_real = true;
  for (const Complex& z : numerators)
    if (z.imag() != 0.0) all_real = false;
  for (const Complex& z : denominators)
    if (z.imag() != 0.0) all_real = false;

  if (all_real) {
    double acc = 0.0;
    int sign = 1;
    for (const Complex& z : numerators) {
      double l;
      int s;
      lgamma_signed(z.real(), l, s);
      acc += l;
      sign *= s;
    }
    for (const Complex& z : denominators) {
      double l;
      int s;
      lgamma_signed(z.real(), l, s);
      acc -= l;
      sign *= s;
    }
    if (acc > 700.0) throw OverflowError("gamma_ratio: overflow in log space");
    return {sign * std::exp(acc), 0.0};
  }

  Complex acc{0.0, 0.0};
  for (const Complex& z : numerators) acc += lgamma_complex(z);
  for (const Complex& z : denominators) acc -= lgamma_complex(z);
  if (acc.real() > 700.0)
    throw OverflowError("gamma_ratio: overflow in log space");
  return std::exp(acc);
}

}  // namespace hyperseries
