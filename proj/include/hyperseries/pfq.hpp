#pragma once

#include <optional>
#include <vector>

#include "hyperseries/core.hpp"

namespace hyperseries {

/// Parameter bundle for a pFq instance. Numerator parameters may be
/// nonpositive integers (terminating series); a denominator parameter that is
/// zero or a negative integer is a construction error unless a numerator
/// terminates the series before the pole is reached.
class HyperSpec {
 public:
  HyperSpec(std::vector<Complex> numerator_params,
            std::vector<Complex> denominator_params);

  const std::vector<Complex>& upper() const { return upper_; }
  const std::vector<Complex>& lower() const { return lower_; }
  size_t p() const { return upper_.size(); }
  size_t q() const { return lower_.size(); }

  /// Degree of the terminating polynomial, if any numerator parameter is a
  /// nonpositive integer.
  std::optional<long> terminating_degree() const { return terminating_; }

  /// All parameters raised by i (the differentiation shift).
  HyperSpec shifted(long i) const;

 private:
  std::vector<Complex> upper_, lower_;
  std::optional<long> terminating_;
};

enum class Klass {
  AllZ_ploeq,            // p <= q: entire
  AllZ_unit_disk,        // p == q+1, |z| < 1
  DivergesAll,           // p > q+1 non-terminating, or p == q+1 with |z| > 1
  AbsOnUnitCircle,       // p == q+1, |z| == 1, Re omega > 0
  CondOnUnitCircle,      // p == q+1, |z| == 1, z != 1, -1 < Re omega <= 0
  DivergesOnUnitCircle,  // p == q+1, |z| == 1, Re omega <= -1 (or z == 1 in the conditional band)
  TerminatesAtDegree,    // a numerator parameter is a nonpositive integer
};

struct ConvergenceReport {
  Complex omega{0.0, 0.0};  // sum(lower) - sum(upper)
  Klass klass = Klass::DivergesAll;
  long degree = -1;  // set for TerminatesAtDegree
};

ConvergenceReport classify_convergence(const HyperSpec& spec, const Complex& z);

/// Direct series evaluation of pFq at z with the term-ratio recurrence.
/// DomainError when the series diverges at z and is non-terminating;
/// non-convergence within max_terms is reported through the result.
SeriesResult eval_pfq(const HyperSpec& spec, const Complex& z, double tol,
                      long max_terms = 100000);

/// m-th series term computed from explicit Pochhammer products (used as a
/// cross-check of the recurrence path).
Complex pfq_term_direct(const HyperSpec& spec, long m, const Complex& z);

struct DerivativeSpec {
  Complex scale;
  HyperSpec shifted;
};

/// i-th derivative of pFq as scale * pFq(all parameters + i).
DerivativeSpec derivative_spec(const HyperSpec& spec, long i);

}  // namespace hyperseries
