#pragma once

#include <utility>
#include <vector>

#include "hyperseries/core.hpp"
#include "hyperseries/rational.hpp"

namespace hyperseries {

/// Power series with exact-rational coefficients, truncated at order N.
struct TruncatedSeries {
  std::vector<Rational> c;  // coefficient of x^k at index k, size N+1

  explicit TruncatedSeries(long order = 0) : c(order + 1) {}
  long order() const { return (long)c.size() - 1; }

  static TruncatedSeries monomial(long k, long order, Rational coeff = Rational(1));

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  void scale(const Rational& r);
  /// Multiply by x^k (dropping coefficients past the truncation order).
  TruncatedSeries shifted_up(long k) const;
  /// Coefficient-wise sign flip of odd orders: s(x) -> s(-x).
  TruncatedSeries at_negated_argument() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
};

struct SeriesDiff {
  bool equal = false;
  Rational max_abs_diff;
  long first_diff_order = -1;
};
SeriesDiff compare_series(const TruncatedSeries& a, const TruncatedSeries& b);

/// Exact pFq coefficients: c_k = prod (a_i)_k / (prod (b_j)_k * k!).
TruncatedSeries series_of_pfq(const std::vector<Rational>& upper,
                              const std::vector<Rational>& lower, long order);

/// Applies (-delta)_i with delta = x d/dx: coefficient of x^k is multiplied
/// by (-k)_i, i.e. (-1)^i * k(k-1)...(k-i+1).
TruncatedSeries apply_delta_pochhammer(const TruncatedSeries& s, long i);

enum class OperatorKind { Nabla, Delta, H, Hbar };

/// One inverse-pair operator, represented by its defining series in
/// (-delta)_t. Nabla/Delta take a single parameter h (stored in beta);
/// H/Hbar take the pair (alpha, beta). The one-variable reduction treats both
/// Euler operators of the two-variable definitions as the same delta.
struct OperatorSpec {
  OperatorKind kind;
  Rational alpha;  // unused for Nabla/Delta
  Rational beta;   // h for Nabla/Delta
  long truncation = 0;
};

TruncatedSeries apply_operator(const OperatorSpec& op, const TruncatedSeries& s);

/// Closed-form diagonal action on x^k (gamma-ratio form of the operator);
/// the series path must reproduce this exactly.
Rational operator_eigenvalue_closed(const OperatorSpec& op, long k);

/// Second printed representation of the Delta operator's eigenvalue (the
/// display with (h)_{2t} and (h+t-1)_t); equality with the first form is an
/// internal consistency check.
Rational delta_eigenvalue_second_rep(const Rational& h, long k, long truncation);

// ------------------------------------------------------ identity checking

enum class IdentityId { Eq31, Eq32, Eq33, Eq34 };
enum class ExpansionId { Eq41, Eq42, Eq43, Eq44, Eq45, Eq46, Eq411 };
enum class Variant { AsPrinted, Corrected };

struct VerifyResult {
  bool pass = false;
  Rational max_abs_coeff_diff;
  long first_diff_order = -1;
};

/// Coefficient-exact check of one functional identity. upper/lower are the
/// full pFq parameter lists; the last one (Eq31/Eq32) or two (Eq33/Eq34)
/// parameter pairs play the operator roles.
VerifyResult verify_functional_identity(IdentityId id,
                                        const std::vector<Rational>& upper,
                                        const std::vector<Rational>& lower,
                                        long order);

/// Coefficient-exact check of one expansion formula under a given reading.
VerifyResult verify_expansion_identity(ExpansionId id,
                                       const std::vector<Rational>& upper,
                                       const std::vector<Rational>& lower,
                                       long order, Variant variant);

struct ExpansionAudit {
  ExpansionId id;
  bool has_distinct_variants = false;
  std::vector<std::pair<Variant, VerifyResult>> results;
  long passing_count() const {
    long n = 0;
    for (auto& r : results) n += r.second.pass ? 1 : 0;
    return n;
  }
};

/// Runs every implemented reading of the formula and reports which pass.
ExpansionAudit audit_expansion(ExpansionId id, const std::vector<Rational>& upper,
                               const std::vector<Rational>& lower, long order);

// Bivariate carrier for the Taylor-shift identities, truncated by total degree.
struct BivariateSeries {
  long order;
  std::vector<std::vector<Rational>> c;  // c[i][j], i + j <= order

  explicit BivariateSeries(long n) : order(n), c(n + 1) {
    for (long i = 0; i <= n; ++i) c[i].assign(n - i + 1, Rational(0));
  }
  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  void scale(const Rational& r);
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);
};

/// pFq composed with a bivariate polynomial argument (constant term zero).
BivariateSeries compose_pfq_bivariate(const std::vector<Rational>& upper,
                                      const std::vector<Rational>& lower,
                                      const BivariateSeries& arg, long order);

}  // namespace hyperseries
