#pragma once

#include <vector>

#include "hyperseries/core.hpp"
#include "hyperseries/multi_series.hpp"
#include "hyperseries/pfq.hpp"

namespace hyperseries {

enum class RuleKind { GaussLaguerre, GaussLegendre };

struct QuadratureRule {
  RuleKind kind;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule by Golub-Welsch from the recurrence coefficients of the
/// orthogonal family. GaussLegendre is mapped to (0,1); GaussLaguerre has
/// weight e^{-x} on (0,inf).
QuadratureRule build_rule(RuleKind kind, int n_points);

/// Integrates x^alpha e^{-x} f on (0,inf): sum w_k f(x_k) with the power
/// folded into the weight.
QuadratureRule gauss_laguerre(int n, double alpha);

/// Integrates s^a (1-s)^b f on (0,1) with both endpoint powers folded in.
QuadratureRule gauss_jacobi01(int n, double a, double b);

QuadratureRule gauss_legendre01(int n);

/// 3F2 via a single exponential integral of a 2F2 kernel; the power at the
/// origin folds into a generalized Laguerre weight. Needs Re alpha1 > 0 and
/// Re x < 1; real parameters.
Complex clausen_via_1d_integral(const HyperSpec& f32, const Complex& x,
                                const QuadratureRule& rule);

/// 3F2 via a double exponential integral of a 1F2 kernel.
Complex clausen_via_2d_integral(const HyperSpec& f32, const Complex& x,
                                const QuadratureRule& rule);

/// 3F2 via a triple exponential integral of a 0F2 kernel (per-axis node
/// count; cost is cubic).
Complex clausen_via_3d_integral(const HyperSpec& f32, const Complex& x,
                                const QuadratureRule& rule);

/// Appell F2 via its double Euler integral. Needs Re c_i > Re b_i > 0; the
/// endpoint powers fold into Gauss-Jacobi weights.
Complex appell_f2_via_integral(const AppellF2Spec& spec, const Complex& x,
                               const Complex& y, const QuadratureRule& rule);

/// Same integral with plain Legendre nodes and the powers left in the
/// integrand (comparison path; needs both exponents >= 0).
Complex appell_f2_via_integral_naive(const AppellF2Spec& spec, const Complex& x,
                                     const Complex& y, const QuadratureRule& rule);

// Stable scalar kernels used by the integral representations.

/// 1F1(a; b; -u) for u >= 0 without alternating-series cancellation.
double hyp1f1_neg(double a, double b, double u);
/// 0F1(b; -t) for t >= 0 (series for small t, Bessel asymptotics for large).
double hyp0f1_neg(double b, double t);
/// 2F2(a1,a2; b1,b2; -u) for u >= 0, via an Euler integral over 1F1.
double hyp2f2_neg(double a1, double a2, double b1, double b2, double u, int n = 80);
/// 1F2(a1; b1,b2; -u) for u >= 0, via an Euler integral over 0F1.
double hyp1f2_neg(double a1, double b1, double b2, double u, int n = 80);

}  // namespace hyperseries
