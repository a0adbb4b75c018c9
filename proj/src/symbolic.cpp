#include "hyperseries/symbolic.hpp"

#include <algorithm>

namespace hyperseries {

// ------------------------------------------------------- TruncatedSeries ---

TruncatedSeries TruncatedSeries::monomial(long k, long order, Rational coeff) {
  TruncatedSeries s(order);
  if (k <= order) s.c[k] = std::move(coeff);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  for (size_t k = 0; k < c.size() && k < o.c.size(); ++k) c[k] += o.c[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  for (size_t k = 0; k < c.size() && k < o.c.size(); ++k) c[k] -= o.c[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  long n = a.order();
  TruncatedSeries r(n);
  for (long i = 0; i <= n; ++i) {
    if (a.c[i].is_zero()) continue;
    for (long j = 0; i + j <= n && j <= b.order(); ++j) {
      if (b.c[j].is_zero()) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

void TruncatedSeries::scale(const Rational& r) {
  for (auto& x : c) x *= r;
}

TruncatedSeries TruncatedSeries::shifted_up(long k) const {
  TruncatedSeries r(order());
  for (long m = 0; m + k <= order(); ++m) r.c[m + k] = c[m];
  return r;
}

TruncatedSeries TruncatedSeries::at_negated_argument() const {
  TruncatedSeries r = *this;
  for (long m = 1; m <= order(); m += 2) r.c[m] = r.c[m].negated();
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.c == b.c;
}

SeriesDiff compare_series(const TruncatedSeries& a, const TruncatedSeries& b) {
  SeriesDiff d;
  d.equal = true;
  long n = std::min(a.order(), b.order());
  for (long k = 0; k <= n; ++k) {
    Rational diff = (a.c[k] - b.c[k]).abs();
    if (!diff.is_zero()) {
      if (d.equal) d.first_diff_order = k;
      d.equal = false;
      if (d.max_abs_diff < diff) d.max_abs_diff = diff;
    }
  }
  return d;
}

// ---------------------------------------------------------- series_of_pfq ---

TruncatedSeries series_of_pfq(const std::vector<Rational>& upper,
                              const std::vector<Rational>& lower, long order) {
  TruncatedSeries s(order);
  Rational term(1);
  for (long k = 0;; ++k) {
    s.c[k] = term;
    if (k == order) break;
    Rational ratio(1, k + 1);
    for (const Rational& a : upper) ratio *= a + Rational(k);
    bool terminated = ratio.is_zero();
    for (const Rational& b : lower) {
      Rational f = b + Rational(k);
      if (f.is_zero()) {
        if (terminated) { ratio = Rational(0); break; }
        throw PoleError("series_of_pfq: denominator parameter pole at order " +
                        std::to_string(k + 1));
      }
      ratio /= f;
    }
    term *= ratio;
    if (term.is_zero()) break;  // terminating series; rest stays zero
  }
  return s;
}

// -------------------------------------------------------------- operators ---

TruncatedSeries apply_delta_pochhammer(const TruncatedSeries& s, long i) {
  if (i < 0) throw DomainError("apply_delta_pochhammer: i must be >= 0");
  TruncatedSeries r = s;
  for (long k = 0; k <= r.order(); ++k) {
    if (r.c[k].is_zero()) continue;
    r.c[k] *= pochhammer_rational(Rational(-k), i);
  }
  return r;
}

namespace {

// Diagonal factor of the operator's defining series on x^k, summed to the
// operator truncation. All four series terminate at t = k since (-k)_t = 0
// beyond.
Rational eigenvalue_from_series(const OperatorSpec& op, long k) {
  long tmax = std::min(op.truncation, k);
  Rational sum(0);
  Rational num(1);   // running (-k)_t (and squared for Nabla/Delta)
  Rational aux(1);   // running (beta-alpha)_t for H/Hbar
  Rational den(1);   // running denominator Pochhammer
  Rational fact(1);  // t!
  for (long t = 0; t <= tmax; ++t) {
    if (t > 0) {
      Rational step = Rational(-k) + Rational(t - 1);
      num *= step;
      fact *= Rational(t);
      switch (op.kind) {
        case OperatorKind::H:
        case OperatorKind::Hbar:
          aux *= (op.beta - op.alpha) + Rational(t - 1);
          break;
        case OperatorKind::Nabla:
        case OperatorKind::Delta:
          num *= step;  // (-delta)_t (-delta')_t collapses to (-k)_t^2
          break;
      }
      Rational dfac;
      switch (op.kind) {
        case OperatorKind::H:
          dfac = op.beta + Rational(t - 1);
          break;
        case OperatorKind::Hbar:
          dfac = Rational(1) - op.alpha - Rational(k) + Rational(t - 1);
          break;
        case OperatorKind::Nabla:
          dfac = op.beta + Rational(t - 1);
          break;
        case OperatorKind::Delta:
          dfac = Rational(1) - op.beta - Rational(2 * k) + Rational(t - 1);
          break;
      }
      if (dfac.is_zero())
        throw PoleError("apply_operator: denominator Pochhammer pole within truncation");
      den *= dfac;
    }
    sum += num * aux / (den * fact);
  }
  return sum;
}

}  // namespace

TruncatedSeries apply_operator(const OperatorSpec& op, const TruncatedSeries& s) {
  if (op.truncation < s.order())
    throw DomainError("apply_operator: truncation below the series order");
  TruncatedSeries r = s;
  for (long k = 0; k <= r.order(); ++k) {
    if (r.c[k].is_zero()) continue;
    r.c[k] *= eigenvalue_from_series(op, k);
  }
  return r;
}

Rational operator_eigenvalue_closed(const OperatorSpec& op, long k) {
  switch (op.kind) {
    case OperatorKind::H:
      return pochhammer_rational(op.alpha, k) / pochhammer_rational(op.beta, k);
    case OperatorKind::Hbar:
      return pochhammer_rational(op.beta, k) / pochhammer_rational(op.alpha, k);
    case OperatorKind::Nabla:
      return pochhammer_rational(op.beta + Rational(k), k) /
             pochhammer_rational(op.beta, k);
    case OperatorKind::Delta:
      return pochhammer_rational(op.beta, k) /
             pochhammer_rational(op.beta + Rational(k), k);
  }
  throw DomainError("unreachable");
}

Rational delta_eigenvalue_second_rep(const Rational& h, long k, long truncation) {
  long tmax = std::min(truncation, k);
  Rational sum(0);
  for (long t = 0; t <= tmax; ++t) {
    Rational term = pochhammer_rational(h, 2 * t);
    Rational nk = pochhammer_rational(Rational(-k), t);
    term *= nk * nk;
    if (t % 2) term = term.negated();
    Rational den = pochhammer_rational(h + Rational(t - 1), t);
    Rational hk = pochhammer_rational(h + Rational(k), t);
    den *= hk * hk;
    den *= pochhammer_rational(Rational(1), t);  // t!
    if (den.is_zero()) throw PoleError("delta second representation: pole");
    sum += term / den;
  }
  return sum;
}

// ----------------------------------------------------- functional identities

VerifyResult verify_functional_identity(IdentityId id,
                                        const std::vector<Rational>& upper,
                                        const std::vector<Rational>& lower,
                                        long order) {
  size_t p = upper.size(), q = lower.size();
  auto drop_last = [](std::vector<Rational> v, size_t n) {
    v.resize(v.size() - n);
    return v;
  };
  VerifyResult out;
  TruncatedSeries lhs(order), rhs(order);
  switch (id) {
    case IdentityId::Eq31: {
      if (p < 3 || q < 2) throw DomainError("Eq31 needs p >= 3, q >= 2");
      lhs = series_of_pfq(upper, lower, order);
      OperatorSpec H{OperatorKind::H, upper[p - 1], lower[q - 1], order};
      rhs = apply_operator(H, series_of_pfq(drop_last(upper, 1), drop_last(lower, 1), order));
      break;
    }
    case IdentityId::Eq32: {
      if (p < 3 || q < 2) throw DomainError("Eq32 needs p >= 3, q >= 2");
      lhs = series_of_pfq(drop_last(upper, 1), drop_last(lower, 1), order);
      OperatorSpec Hb{OperatorKind::Hbar, upper[p - 1], lower[q - 1], order};
      rhs = apply_operator(Hb, series_of_pfq(upper, lower, order));
      break;
    }
    case IdentityId::Eq33: {
      if (p < 4 || q < 3) throw DomainError("Eq33 needs p >= 4, q >= 3");
      lhs = series_of_pfq(upper, lower, order);
      OperatorSpec H1{OperatorKind::H, upper[p - 2], lower[q - 2], order};
      OperatorSpec H2{OperatorKind::H, upper[p - 1], lower[q - 1], order};
      rhs = apply_operator(
          H2, apply_operator(H1, series_of_pfq(drop_last(upper, 2), drop_last(lower, 2), order)));
      break;
    }
    case IdentityId::Eq34: {
      if (p < 4 || q < 3) throw DomainError("Eq34 needs p >= 4, q >= 3");
      lhs = series_of_pfq(drop_last(upper, 2), drop_last(lower, 2), order);
      OperatorSpec H1{OperatorKind::Hbar, upper[p - 2], lower[q - 2], order};
      OperatorSpec H2{OperatorKind::Hbar, upper[p - 1], lower[q - 1], order};
      rhs = apply_operator(H2, apply_operator(H1, series_of_pfq(upper, lower, order)));
      break;
    }
  }
  SeriesDiff d = compare_series(lhs, rhs);
  out.pass = d.equal;
  out.max_abs_coeff_diff = d.max_abs_diff;
  out.first_diff_order = d.first_diff_order;
  return out;
}

// ------------------------------------------------------ expansion formulas

namespace {

std::vector<Rational> shift_all(std::vector<Rational> v, long i) {
  for (Rational& r : v) r += Rational(i);
  return v;
}

// Sum_i coef(i) * x^i * series(inner params at shift i), truncated.
TruncatedSeries lower_once_rhs(const std::vector<Rational>& upper,
                               const std::vector<Rational>& lower, long order) {
  size_t p = upper.size(), q = lower.size();
  std::vector<Rational> up1(upper.begin(), upper.end() - 1);
  std::vector<Rational> lo1(lower.begin(), lower.end() - 1);
  Rational alpha_p = upper[p - 1], beta_q = lower[q - 1];
  TruncatedSeries rhs(order);
  Rational coef(1);
  for (long i = 0; i <= order; ++i) {
    if (i > 0) {
      Rational im1(i - 1);
      for (const Rational& a : up1) coef *= a + im1;
      coef *= (beta_q - alpha_p) + im1;
      for (const Rational& b : lo1) coef /= b + im1;
      coef /= beta_q + im1;
      coef /= Rational(i);
      coef = coef.negated();
    }
    TruncatedSeries inner = series_of_pfq(shift_all(up1, i), shift_all(lo1, i), order);
    inner.scale(coef);
    rhs += inner.shifted_up(i);
  }
  return rhs;
}

TruncatedSeries raise_once_rhs(const std::vector<Rational>& upper,
                               const std::vector<Rational>& lower, long order,
                               Variant variant) {
  size_t p = upper.size(), q = lower.size();
  std::vector<Rational> up1(upper.begin(), upper.end() - 1);
  Rational alpha_p = upper[p - 1], beta_q = lower[q - 1];
  TruncatedSeries rhs(order);
  for (long i = 0; i <= order; ++i) {
    Rational coef(1);
    for (const Rational& a : up1) coef *= pochhammer_rational(a, i);
    coef *= pochhammer_rational(beta_q - alpha_p, i);
    for (const Rational& b : lower) coef /= pochhammer_rational(b, i);
    if (variant == Variant::AsPrinted)  // the printed product runs one slot past beta_q
      coef /= pochhammer_rational(beta_q, i);
    coef /= pochhammer_rational(Rational(1), i);
    std::vector<Rational> up_in = shift_all(up1, i);
    up_in.push_back(alpha_p);
    TruncatedSeries inner = series_of_pfq(up_in, shift_all(lower, i), order);
    inner.scale(coef);
    rhs += inner.shifted_up(i);
  }
  return rhs;
}

TruncatedSeries lower_twice_rhs(const std::vector<Rational>& upper,
                                const std::vector<Rational>& lower, long order,
                                Variant variant) {
  size_t p = upper.size(), q = lower.size();
  std::vector<Rational> up2(upper.begin(), upper.end() - 2);
  std::vector<Rational> lo2(lower.begin(), lower.end() - 2);
  Rational a_pm1 = upper[p - 2], a_p = upper[p - 1];
  Rational b_qm1 = lower[q - 2], b_q = lower[q - 1];
  TruncatedSeries rhs(order);
  for (long i = 0; i <= order; ++i) {
    for (long j = 0; i + j <= order; ++j) {
      Rational coef(1);
      for (const Rational& a : up2) coef *= pochhammer_rational(a, i + j);
      coef *= pochhammer_rational(a_pm1, i);
      coef *= pochhammer_rational(b_qm1 - a_pm1, j);
      coef *= pochhammer_rational(b_q - a_p, i);
      for (const Rational& b : lo2) coef /= pochhammer_rational(b, i + j);
      coef /= pochhammer_rational(b_qm1, i + j);
      coef /= pochhammer_rational(b_q, i);
      coef /= pochhammer_rational(Rational(1), i) * pochhammer_rational(Rational(1), j);
      if ((i + j) % 2) coef = coef.negated();
      long shift = variant == Variant::AsPrinted ? i : i + j;
      TruncatedSeries inner =
          series_of_pfq(shift_all(up2, shift), shift_all(lo2, shift), order);
      inner.scale(coef);
      rhs += inner.shifted_up(i + j);
    }
  }
  return rhs;
}

TruncatedSeries raise_twice_rhs(const std::vector<Rational>& upper,
                                const std::vector<Rational>& lower, long order) {
  size_t p = upper.size(), q = lower.size();
  std::vector<Rational> up2(upper.begin(), upper.end() - 2);
  Rational a_pm1 = upper[p - 2], a_p = upper[p - 1];
  Rational b_qm1 = lower[q - 2], b_q = lower[q - 1];
  TruncatedSeries rhs(order);
  for (long i = 0; i <= order; ++i) {
    for (long j = 0; i + j <= order; ++j) {
      Rational coef(1);
      for (const Rational& a : up2) coef *= pochhammer_rational(a, i + j);
      coef *= pochhammer_rational(a_p, j);
      coef *= pochhammer_rational(b_qm1, i);
      coef *= pochhammer_rational(b_qm1 - a_pm1, i + j);
      coef *= pochhammer_rational(b_q - a_p, i);
      for (const Rational& b : lower) coef /= pochhammer_rational(b, i + j);
      coef /= pochhammer_rational(b_qm1 - a_pm1, i);
      coef /= pochhammer_rational(Rational(1), i) * pochhammer_rational(Rational(1), j);
      std::vector<Rational> up_in = shift_all(up2, i + j);
      up_in.push_back(a_pm1);
      up_in.push_back(a_p + Rational(j));
      TruncatedSeries inner =
          series_of_pfq(up_in, shift_all(lower, i + j), order);
      inner.scale(coef);
      rhs += inner.shifted_up(i + j);
    }
  }
  return rhs;
}

TruncatedSeries alternating_rhs(const std::vector<Rational>& upper,
                                const std::vector<Rational>& lower, long order,
                                Variant variant) {
  size_t p = upper.size(), q = lower.size();
  std::vector<Rational> up1(upper.begin(), upper.end() - 1);
  std::vector<Rational> lo1(lower.begin(), lower.end() - 1);
  Rational a_p = upper[p - 1], b_q = lower[q - 1];
  TruncatedSeries rhs(order);
  for (long j = 0; j <= order; ++j) {
    Rational coef(1);
    for (const Rational& a : up1) coef *= pochhammer_rational(a, j);
    for (const Rational& b : lo1) coef /= pochhammer_rational(b, j);
    coef /= pochhammer_rational(Rational(1), j);
    std::vector<Rational> up_in = shift_all(up1, j);
    up_in.push_back(b_q - a_p);
    std::vector<Rational> lo_in = shift_all(lo1, j);
    if (variant == Variant::AsPrinted) lo_in.push_back(b_q + Rational(j));
    lo_in.push_back(b_q);
    TruncatedSeries inner = series_of_pfq(up_in, lo_in, order);
    inner = inner.at_negated_argument();
    inner.scale(coef);
    rhs += inner.shifted_up(j);
  }
  return rhs;
}

BivariateSeries bivariate_x_plus_y(long n) {
  BivariateSeries P(n);
  if (n >= 1) {
    P.c[1][0] = Rational(1);
    P.c[0][1] = Rational(1);
  }
  return P;
}

BivariateSeries bivariate_xy(long n) {
  BivariateSeries P(n);
  if (n >= 2) P.c[1][1] = Rational(1);
  return P;
}

}  // namespace

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  for (long i = 0; i <= order; ++i)
    for (long j = 0; i + j <= order; ++j) c[i][j] += o.c[i][j];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  for (long i = 0; i <= order; ++i)
    for (long j = 0; i + j <= order; ++j) c[i][j] -= o.c[i][j];
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(a.order);
  for (long i = 0; i <= a.order; ++i)
    for (long j = 0; i + j <= a.order; ++j) {
      if (a.c[i][j].is_zero()) continue;
      for (long u = 0; i + u <= a.order; ++u)
        for (long v = 0; i + j + u + v <= a.order && v <= a.order - u; ++v) {
          if (u + v > b.order || b.c[u][v].is_zero()) continue;
          r.c[i + u][j + v] += a.c[i][j] * b.c[u][v];
        }
    }
  return r;
}

void BivariateSeries::scale(const Rational& r) {
  for (auto& row : c)
    for (auto& x : row) x *= r;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  return a.order == b.order && a.c == b.c;
}

BivariateSeries compose_pfq_bivariate(const std::vector<Rational>& upper,
                                      const std::vector<Rational>& lower,
                                      const BivariateSeries& arg, long order) {
  if (!arg.c[0][0].is_zero())
    throw DomainError("compose_pfq_bivariate: argument must vanish at the origin");
  TruncatedSeries f = series_of_pfq(upper, lower, order);
  BivariateSeries result(order);
  BivariateSeries power(order);
  power.c[0][0] = Rational(1);
  for (long m = 0; m <= order; ++m) {
    if (m > 0) power = power * arg;
    if (f.c[m].is_zero()) continue;
    BivariateSeries t = power;
    t.scale(f.c[m]);
    result += t;
  }
  return result;
}

VerifyResult verify_expansion_identity(ExpansionId id,
                                       const std::vector<Rational>& upper,
                                       const std::vector<Rational>& lower,
                                       long order, Variant variant) {
  VerifyResult out;
  size_t p = upper.size(), q = lower.size();
  auto finish_uni = [&](const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    SeriesDiff d = compare_series(lhs, rhs);
    out.pass = d.equal;
    out.max_abs_coeff_diff = d.max_abs_diff;
    out.first_diff_order = d.first_diff_order;
  };

  switch (id) {
    case ExpansionId::Eq41: {
      if (p < 3 || q < 2) throw DomainError("Eq41 needs p >= 3, q >= 2");
      finish_uni(series_of_pfq(upper, lower, order), lower_once_rhs(upper, lower, order));
      break;
    }
    case ExpansionId::Eq42: {
      if (p < 3 || q < 2) throw DomainError("Eq42 needs p >= 3, q >= 2");
      std::vector<Rational> up1(upper.begin(), upper.end() - 1);
      std::vector<Rational> lo1(lower.begin(), lower.end() - 1);
      finish_uni(series_of_pfq(up1, lo1, order),
                 raise_once_rhs(upper, lower, order, variant));
      break;
    }
    case ExpansionId::Eq43: {
      if (p < 4 || q < 3) throw DomainError("Eq43 needs p >= 4, q >= 3");
      finish_uni(series_of_pfq(upper, lower, order),
                 lower_twice_rhs(upper, lower, order, variant));
      break;
    }
    case ExpansionId::Eq44: {
      if (p < 4 || q < 3) throw DomainError("Eq44 needs p >= 4, q >= 3");
      std::vector<Rational> up2(upper.begin(), upper.end() - 2);
      std::vector<Rational> lo2(lower.begin(), lower.end() - 2);
      finish_uni(series_of_pfq(up2, lo2, order), raise_twice_rhs(upper, lower, order));
      break;
    }
    case ExpansionId::Eq411: {
      if (p < 3 || q < 2) throw DomainError("Eq411 needs p >= 3, q >= 2");
      finish_uni(series_of_pfq(upper, lower, order),
                 alternating_rhs(upper, lower, order, variant));
      break;
    }
    case ExpansionId::Eq45:
    case ExpansionId::Eq46: {
      BivariateSeries xpy = bivariate_x_plus_y(order);
      BivariateSeries xy = bivariate_xy(order);
      BivariateSeries mix = xpy;  // x + y - xy
      {
        BivariateSeries t = xy;
        t.scale(Rational(-1));
        mix += t;
      }
      const BivariateSeries& lhs_arg = id == ExpansionId::Eq45 ? mix : xpy;
      const BivariateSeries& rhs_arg = id == ExpansionId::Eq45 ? xpy : mix;
      BivariateSeries lhs = compose_pfq_bivariate(upper, lower, lhs_arg, order);
      BivariateSeries rhs(order);
      BivariateSeries xy_pow(order);
      xy_pow.c[0][0] = Rational(1);
      for (long i = 0; 2 * i <= order; ++i) {
        if (i > 0) xy_pow = xy_pow * xy;
        Rational coef(1);
        for (const Rational& a : upper) coef *= pochhammer_rational(a, i);
        for (const Rational& b : lower) coef /= pochhammer_rational(b, i);
        coef /= pochhammer_rational(Rational(1), i);
        if (id == ExpansionId::Eq45 && (i % 2)) coef = coef.negated();
        BivariateSeries inner =
            compose_pfq_bivariate(shift_all(upper, i), shift_all(lower, i), rhs_arg, order);
        inner = inner * xy_pow;
        inner.scale(coef);
        rhs += inner;
      }
      BivariateSeries diff = lhs;
      diff -= rhs;
      out.pass = true;
      for (long i = 0; i <= order; ++i)
        for (long j = 0; i + j <= order; ++j) {
          Rational d = diff.c[i][j].abs();
          if (!d.is_zero()) {
            if (out.pass) out.first_diff_order = i + j;
            out.pass = false;
            if (out.max_abs_coeff_diff < d) out.max_abs_coeff_diff = d;
          }
        }
      break;
    }
  }
  return out;
}

ExpansionAudit audit_expansion(ExpansionId id, const std::vector<Rational>& upper,
                               const std::vector<Rational>& lower, long order) {
  ExpansionAudit audit;
  audit.id = id;
  bool two = id == ExpansionId::Eq42 || id == ExpansionId::Eq43 || id == ExpansionId::Eq411;
  audit.has_distinct_variants = two;
  audit.results.emplace_back(Variant::AsPrinted,
                             verify_expansion_identity(id, upper, lower, order, Variant::AsPrinted));
  if (two)
    audit.results.emplace_back(Variant::Corrected,
                               verify_expansion_identity(id, upper, lower, order, Variant::Corrected));
  return audit;
}

}  // namespace hyperseries
