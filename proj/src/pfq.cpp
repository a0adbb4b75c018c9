#include "hyperseries/pfq.hpp"

#include <algorithm>
#include <cmath>

namespace hyperseries {

namespace {
std::optional<long> find_terminating_degree(const std::vector<Complex>& upper) {
  std::optional<long> deg;
  for (const Complex& a : upper) {
    if (is_nonpositive_integer(a)) {
      long d = (long)std::llround(-a.real());
      if (!deg || d < *deg) deg = d;
    }
  }
  return deg;
}
}  // namespace

HyperSpec::HyperSpec(std::vector<Complex> numerator_params,
                     std::vector<Complex> denominator_params)
    : upper_(std::move(numerator_params)), lower_(std::move(denominator_params)) {
  for (const Complex& a : upper_) require_finite(a, "HyperSpec numerator");
  for (const Complex& b : lower_) require_finite(b, "HyperSpec denominator");
  terminating_ = find_terminating_degree(upper_);
  for (const Complex& b : lower_) {
    if (is_nonpositive_integer(b)) {
      // (b)_m first vanishes at m = -b + 1; terms up to degree -b stay finite.
      long pole_after = (long)std::llround(-b.real());
      if (!terminating_ || *terminating_ > pole_after)
        throw PoleError(
            "HyperSpec: denominator parameter is zero or a negative integer");
    }
  }
}

HyperSpec HyperSpec::shifted(long i) const {
  std::vector<Complex> up = upper_, lo = lower_;
  for (Complex& a : up) a += (double)i;
  for (Complex& b : lo) b += (double)i;
  return HyperSpec(std::move(up), std::move(lo));
}

ConvergenceReport classify_convergence(const HyperSpec& spec, const Complex& z) {
  require_finite(z, "classify_convergence z");
  ConvergenceReport rep;
  Complex omega{0.0, 0.0};
  for (const Complex& b : spec.lower()) omega += b;
  for (const Complex& a : spec.upper()) omega -= a;
  rep.omega = omega;

  if (auto deg = spec.terminating_degree()) {
    rep.klass = Klass::TerminatesAtDegree;
    rep.degree = *deg;
    return rep;
  }

  size_t p = spec.p(), q = spec.q();
  if (p <= q) {
    rep.klass = Klass::AllZ_ploeq;
    return rep;
  }
  if (p > q + 1) {
    rep.klass = Klass::DivergesAll;
    return rep;
  }
  // p == q + 1
  double r = std::abs(z);
  const double kCircleTol = 1e-12;
  if (r < 1.0 - kCircleTol) {
    rep.klass = Klass::AllZ_unit_disk;
  } else if (r <= 1.0 + kCircleTol) {
    double w = omega.real();
    bool at_one = std::abs(z - Complex(1.0, 0.0)) <= kCircleTol;
    if (w > 0.0)
      rep.klass = Klass::AbsOnUnitCircle;
    else if (w > -1.0 && !at_one)
      rep.klass = Klass::CondOnUnitCircle;
    else
      rep.klass = Klass::DivergesOnUnitCircle;
  } else {
    rep.klass = Klass::DivergesAll;
  }
  return rep;
}

SeriesResult eval_pfq(const HyperSpec& spec, const Complex& z, double tol,
                      long max_terms) {
  require_finite(z, "eval_pfq z");
  if (!(tol > 0)) throw DomainError("eval_pfq: tol must be positive");

  if (z == Complex(0.0, 0.0)) {
    SeriesResult r;
    r.value = {1.0, 0.0};
    r.terms_used = 1;
    r.tail_estimate = 0.0;
    r.converged = true;
    return r;
  }

  ConvergenceReport rep = classify_convergence(spec, z);
  long cap = max_terms;
  switch (rep.klass) {
    case Klass::TerminatesAtDegree:
      cap = std::min(max_terms, rep.degree + 1);
      break;
    case Klass::AllZ_ploeq:
    case Klass::AllZ_unit_disk:
    case Klass::AbsOnUnitCircle:
      break;
    case Klass::CondOnUnitCircle:
      cap = max_terms * 10;  // conditional convergence is slow
      break;
    case Klass::DivergesOnUnitCircle:
    case Klass::DivergesAll:
      throw DomainError("eval_pfq: series diverges at z and does not terminate");
  }

  Complex term{1.0, 0.0};
  bool done = false;
  auto gen = [&](long m) -> Complex {
    if (done) return {0.0, 0.0};
    Complex t = term;
    Complex ratio = z / Complex((double)(m + 1), 0.0);
    for (const Complex& a : spec.upper()) ratio *= a + (double)m;
    for (const Complex& b : spec.lower()) ratio /= b + (double)m;
    term *= ratio;
    return t;
  };

  if (rep.klass == Klass::TerminatesAtDegree) {
    // Exact finite sum: no tolerance games, no denominator poles past the end.
    CompensatedSum acc;
    Complex t{1.0, 0.0};
    long deg = rep.degree;
    for (long m = 0; m <= deg; ++m) {
      acc.add(t);
      if (m == deg) break;
      Complex ratio = z / Complex((double)(m + 1), 0.0);
      for (const Complex& a : spec.upper()) ratio *= a + (double)m;
      for (const Complex& b : spec.lower()) ratio /= b + (double)m;
      t *= ratio;
    }
    SeriesResult r;
    r.value = acc.value();
    r.terms_used = deg + 1;
    r.tail_estimate = 0.0;
    r.converged = true;
    return r;
  }

  return accumulate_series(gen, tol, cap);
}

Complex pfq_term_direct(const HyperSpec& spec, long m, const Complex& z) {
  Complex t = std::pow(z, (double)m);
  for (const Complex& a : spec.upper()) t *= pochhammer(a, m);
  for (const Complex& b : spec.lower()) t /= pochhammer(b, m);
  double fact = 1.0;
  for (long k = 2; k <= m; ++k) fact *= (double)k;
  return t / fact;
}

DerivativeSpec derivative_spec(const HyperSpec& spec, long i) {
  if (i < 0) throw DomainError("derivative_spec: order must be nonnegative");
  Complex scale{1.0, 0.0};
  for (const Complex& a : spec.upper()) scale *= pochhammer(a, i);
  for (const Complex& b : spec.lower()) scale /= pochhammer(b, i);
  return {scale, spec.shifted(i)};  // HyperSpec ctor re-checks the restriction
}

}  // namespace hyperseries
