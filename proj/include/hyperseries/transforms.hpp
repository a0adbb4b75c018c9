#pragma once

#include <optional>
#include <utility>

#include "hyperseries/pfq.hpp"
#include "hyperseries/symbolic.hpp"  // Variant

namespace hyperseries {

struct ExpansionResult {
  Complex value{0.0, 0.0};
  long outer_terms = 0;
  // |value - direct| / (1 + |direct|); present when the direct series
  // converges at the evaluation point.
  std::optional<double> residual_vs_direct;
};

/// pFq(x) as an outer sum over order-lowered functions with shifted
/// parameters (the distinguished pair is the last one of each list).
ExpansionResult expand_lower_once(const HyperSpec& spec, const Complex& x,
                                  long outer_terms);

/// (p-1)F(q-1)(x) rebuilt from order-raised functions; aux supplies the
/// appended parameter pair.
ExpansionResult expand_raise_once(const HyperSpec& spec_small,
                                  const std::pair<Complex, Complex>& aux,
                                  const Complex& x, long outer_terms,
                                  Variant variant = Variant::Corrected);

ExpansionResult expand_lower_twice(const HyperSpec& spec, const Complex& x,
                                   long outer_terms,
                                   Variant variant = Variant::Corrected);

ExpansionResult expand_raise_twice(const HyperSpec& spec_small,
                                   const std::pair<Complex, Complex>& aux1,
                                   const std::pair<Complex, Complex>& aux2,
                                   const Complex& x, long outer_terms);

/// pFq(x + y - xy) from shifted functions of x + y.
ExpansionResult taylor_shift_product(const HyperSpec& spec, const Complex& x,
                                     const Complex& y, long outer_terms);

/// pFq(x + y) from shifted functions of x + y - xy.
ExpansionResult taylor_shift_sum(const HyperSpec& spec, const Complex& x,
                                 const Complex& y, long outer_terms);

/// pFq(x) as an outer sum over alternating-argument functions of -x.
ExpansionResult expand_alternating(const HyperSpec& spec, const Complex& x,
                                   long outer_terms,
                                   Variant variant = Variant::Corrected);

enum class KdfIdentity { Eq412, Eq413 };

/// Both sides of the Kampe-de-Feriet reduction identities for a 3F2;
/// lhs by direct series, rhs by the double series (with the Euler-type
/// prefactor for Eq413).
std::pair<Complex, Complex> kdf_identity_sides(KdfIdentity which,
                                               const HyperSpec& spec3f2,
                                               const Complex& x,
                                               double tol = 1e-12);

}  // namespace hyperseries
