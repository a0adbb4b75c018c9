#include "hyperseries/transforms.hpp"

#include <cmath>

#include "hyperseries/multi_series.hpp"

namespace hyperseries {

namespace {

constexpr double kInnerTol = 1e-14;

std::vector<Complex> shift_all(std::vector<Complex> v, long i) {
  for (Complex& z : v) z += (double)i;
  return v;
}

std::optional<double> residual_against_direct(const HyperSpec& spec,
                                              const Complex& x,
                                              const Complex& value) {
  ConvergenceReport rep = classify_convergence(spec, x);
  switch (rep.klass) {
    case Klass::AllZ_ploeq:
    case Klass::AllZ_unit_disk:
    case Klass::AbsOnUnitCircle:
    case Klass::TerminatesAtDegree:
      break;
    default:
      return std::nullopt;
  }
  SeriesResult direct = eval_pfq(spec, x, 1e-13, 400000);
  if (!direct.converged) return std::nullopt;
  return std::abs(value - direct.value) / (1.0 + std::abs(direct.value));
}

Complex inner_value(const std::vector<Complex>& up,
                    const std::vector<Complex>& lo, const Complex& x) {
  SeriesResult r = eval_pfq(HyperSpec(up, lo), x, kInnerTol, 400000);
  if (!r.converged)
    throw DomainError("expansion inner series failed to converge");
  return r.value;
}

}  // namespace

ExpansionResult expand_lower_once(const HyperSpec& spec, const Complex& x,
                                  long outer_terms) {
  if (spec.p() < 3 || spec.q() < 2)
    throw DomainError("expand_lower_once needs p >= 3, q >= 2");
  std::vector<Complex> up1(spec.upper().begin(), spec.upper().end() - 1);
  std::vector<Complex> lo1(spec.lower().begin(), spec.lower().end() - 1);
  Complex ap = spec.upper().back(), bq = spec.lower().back();
  CompensatedSum acc;
  Complex coef{1.0, 0.0};
  Complex xi{1.0, 0.0};
  for (long i = 0; i < outer_terms; ++i) {
    if (i > 0) {
      double im1 = (double)(i - 1);
      Complex r = -x / Complex((double)i, 0.0);
      for (const Complex& a : up1) r *= a + im1;
      r *= (bq - ap) + im1;
      for (const Complex& b : lo1) r /= b + im1;
      r /= bq + im1;
      coef *= r;
    }
    (void)xi;
    acc.add(coef * inner_value(shift_all(up1, i), shift_all(lo1, i), x));
  }
  ExpansionResult res;
  res.value = acc.value();
  res.outer_terms = outer_terms;
  res.residual_vs_direct = residual_against_direct(spec, x, res.value);
  return res;
}

ExpansionResult expand_raise_once(const HyperSpec& spec_small,
                                  const std::pair<Complex, Complex>& aux,
                                  const Complex& x, long outer_terms,
                                  Variant variant) {
  std::vector<Complex> up1 = spec_small.upper();
  std::vector<Complex> lo1 = spec_small.lower();
  if (up1.size() < 2 || lo1.size() < 1)
    throw DomainError("expand_raise_once needs p-1 >= 2, q-1 >= 1");
  Complex ap = aux.first, bq = aux.second;
  std::vector<Complex> lo_full = lo1;
  lo_full.push_back(bq);
  CompensatedSum acc;
  Complex coef{1.0, 0.0};
  for (long i = 0; i < outer_terms; ++i) {
    if (i > 0) {
      double im1 = (double)(i - 1);
      Complex r = x / Complex((double)i, 0.0);
      for (const Complex& a : up1) r *= a + im1;
      r *= (bq - ap) + im1;
      for (const Complex& b : lo_full) r /= b + im1;
      if (variant == Variant::AsPrinted) r /= bq + im1;  // printed extra slot
      coef *= r;
    }
    std::vector<Complex> up_in = shift_all(up1, i);
    up_in.push_back(ap);
    acc.add(coef * inner_value(up_in, shift_all(lo_full, i), x));
  }
  ExpansionResult res;
  res.value = acc.value();
  res.outer_terms = outer_terms;
  res.residual_vs_direct = residual_against_direct(
      HyperSpec(spec_small.upper(), spec_small.lower()), x, res.value);
  return res;
}

ExpansionResult expand_lower_twice(const HyperSpec& spec, const Complex& x,
                                   long outer_terms, Variant variant) {
  if (spec.p() < 4 || spec.q() < 3)
    throw DomainError("expand_lower_twice needs p >= 4, q >= 3");
  std::vector<Complex> up2(spec.upper().begin(), spec.upper().end() - 2);
  std::vector<Complex> lo2(spec.lower().begin(), spec.lower().end() - 2);
  Complex apm1 = spec.upper()[spec.p() - 2], ap = spec.upper().back();
  Complex bqm1 = spec.lower()[spec.q() - 2], bq = spec.lower().back();
  CompensatedSum acc;
  for (long i = 0; i < outer_terms; ++i)
    for (long j = 0; i + j < outer_terms; ++j) {
      Complex coef{1.0, 0.0};
      for (const Complex& a : up2) coef *= pochhammer(a, i + j);
      coef *= pochhammer(apm1, i) * pochhammer(bqm1 - apm1, j) *
              pochhammer(bq - ap, i);
      for (const Complex& b : lo2) coef /= pochhammer(b, i + j);
      coef /= pochhammer(bqm1, i + j) * pochhammer(bq, i);
      coef /= std::tgamma((double)i + 1.0) * std::tgamma((double)j + 1.0);
      if ((i + j) % 2) coef = -coef;
      coef *= std::pow(x, (double)(i + j));
      long shift = variant == Variant::AsPrinted ? i : i + j;
      acc.add(coef * inner_value(shift_all(up2, shift), shift_all(lo2, shift), x));
    }
  ExpansionResult res;
  res.value = acc.value();
  res.outer_terms = outer_terms;
  res.residual_vs_direct = residual_against_direct(spec, x, res.value);
  return res;
}

ExpansionResult expand_raise_twice(const HyperSpec& spec_small,
                                   const std::pair<Complex, Complex>& aux1,
                                   const std::pair<Complex, Complex>& aux2,
                                   const Complex& x, long outer_terms) {
  // aux1 = (alpha_{p-1}, beta_{q-1}), aux2 = (alpha_p, beta_q)
  std::vector<Complex> up2 = spec_small.upper();
  std::vector<Complex> lo2 = spec_small.lower();
  Complex apm1 = aux1.first, bqm1 = aux1.second;
  Complex ap = aux2.first, bq = aux2.second;
  std::vector<Complex> lo_full = lo2;
  lo_full.push_back(bqm1);
  lo_full.push_back(bq);
  CompensatedSum acc;
  for (long i = 0; i < outer_terms; ++i)
    for (long j = 0; i + j < outer_terms; ++j) {
      Complex coef{1.0, 0.0};
      for (const Complex& a : up2) coef *= pochhammer(a, i + j);
      // (b_{q-1}-a_{p-1})_{i+j} over (b_{q-1}-a_{p-1})_i as one factor, so
      // an equal parameter pair cancels cleanly instead of forming 0/0
      coef *= pochhammer(ap, j) * pochhammer(bqm1, i) *
              pochhammer(bqm1 - apm1 + (double)i, j) * pochhammer(bq - ap, i);
      for (const Complex& b : lo_full) coef /= pochhammer(b, i + j);
      coef /= std::tgamma((double)i + 1.0) * std::tgamma((double)j + 1.0);
      coef *= std::pow(x, (double)(i + j));
      std::vector<Complex> up_in = shift_all(up2, i + j);
      up_in.push_back(apm1);
      up_in.push_back(ap + (double)j);
      acc.add(coef * inner_value(up_in, shift_all(lo_full, i + j), x));
    }
  ExpansionResult res;
  res.value = acc.value();
  res.outer_terms = outer_terms;
  res.residual_vs_direct = residual_against_direct(
      HyperSpec(spec_small.upper(), spec_small.lower()), x, res.value);
  return res;
}

namespace {

ExpansionResult taylor_shift(const HyperSpec& spec, const Complex& x,
                             const Complex& y, long outer_terms, bool product) {
  Complex inner_arg = product ? x + y : x + y - x * y;
  Complex target_arg = product ? x + y - x * y : x + y;
  Complex h = x * y;
  CompensatedSum acc;
  Complex coef{1.0, 0.0};
  for (long i = 0; i < outer_terms; ++i) {
    if (i > 0) {
      double im1 = (double)(i - 1);
      Complex r = h / Complex((double)i, 0.0);
      for (const Complex& a : spec.upper()) r *= a + im1;
      for (const Complex& b : spec.lower()) r /= b + im1;
      if (product) r = -r;
      coef *= r;
    }
    acc.add(coef *
            inner_value(shift_all(spec.upper(), i), shift_all(spec.lower(), i),
                        inner_arg));
  }
  ExpansionResult res;
  res.value = acc.value();
  res.outer_terms = outer_terms;
  res.residual_vs_direct = residual_against_direct(spec, target_arg, res.value);
  return res;
}

}  // namespace

ExpansionResult taylor_shift_product(const HyperSpec& spec, const Complex& x,
                                     const Complex& y, long outer_terms) {
  return taylor_shift(spec, x, y, outer_terms, true);
}

ExpansionResult taylor_shift_sum(const HyperSpec& spec, const Complex& x,
                                 const Complex& y, long outer_terms) {
  return taylor_shift(spec, x, y, outer_terms, false);
}

ExpansionResult expand_alternating(const HyperSpec& spec, const Complex& x,
                                   long outer_terms, Variant variant) {
  if (spec.p() < 3 || spec.q() < 2)
    throw DomainError("expand_alternating needs p >= 3, q >= 2");
  std::vector<Complex> up1(spec.upper().begin(), spec.upper().end() - 1);
  std::vector<Complex> lo1(spec.lower().begin(), spec.lower().end() - 1);
  Complex ap = spec.upper().back(), bq = spec.lower().back();
  CompensatedSum acc;
  Complex coef{1.0, 0.0};
  for (long j = 0; j < outer_terms; ++j) {
    if (j > 0) {
      double jm1 = (double)(j - 1);
      Complex num = x;
      for (const Complex& a : up1) num *= a + jm1;
      if (num == Complex(0.0, 0.0)) break;  // terminating outer sum
      Complex r = num / Complex((double)j, 0.0);
      for (const Complex& b : lo1) r /= b + jm1;
      coef *= r;
    }
    if (coef == Complex(0.0, 0.0)) break;
    std::vector<Complex> up_in = shift_all(up1, j);
    up_in.push_back(bq - ap);
    std::vector<Complex> lo_in = shift_all(lo1, j);
    if (variant == Variant::AsPrinted) lo_in.push_back(bq + (double)j);
    lo_in.push_back(bq);
    acc.add(coef * inner_value(up_in, lo_in, -x));
  }
  ExpansionResult res;
  res.value = acc.value();
  res.outer_terms = outer_terms;
  res.residual_vs_direct = residual_against_direct(spec, x, res.value);
  return res;
}

std::pair<Complex, Complex> kdf_identity_sides(KdfIdentity which,
                                               const HyperSpec& spec3f2,
                                               const Complex& x, double tol) {
  if (spec3f2.p() != 3 || spec3f2.q() != 2)
    throw DomainError("kdf_identity_sides needs a 3F2 parameter set");
  const Complex a1 = spec3f2.upper()[0], a2 = spec3f2.upper()[1],
                a3 = spec3f2.upper()[2];
  const Complex b1 = spec3f2.lower()[0], b2 = spec3f2.lower()[1];

  SeriesResult lhs = eval_pfq(spec3f2, x, tol, 400000);
  if (!lhs.converged)
    throw DomainError("kdf_identity_sides: direct side does not converge here");

  Complex rhs;
  if (which == KdfIdentity::Eq412) {
    KdFSpec kdf({a1, a2}, {b2 - a3}, {}, {b1}, {b2}, {});
    SeriesResult r = eval_kdf(kdf, -x, x, tol);
    if (!r.converged) throw NonConvergenceError("Eq412 double series diverged");
    rhs = r.value;
  } else {
    if (x.imag() == 0.0 && x.real() >= 0.5)
      throw DomainError("Eq413 needs x < 1/2 on the real line");
    Complex u = x / (x - 1.0);
    KdFSpec kdf({a1}, {a2, b2 - a3}, {b1 - a2}, {b1}, {b2}, {});
    SeriesResult r = eval_kdf(kdf, u, u, tol);
    if (!r.converged) throw NonConvergenceError("Eq413 double series diverged");
    rhs = std::pow(1.0 - x, -a1) * r.value;
  }
  return {lhs.value, rhs};
}

}  // namespace hyperseries
