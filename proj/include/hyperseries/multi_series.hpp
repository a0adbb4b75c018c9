#pragma once

#include <vector>

#include "hyperseries/core.hpp"

namespace hyperseries {

/// Appell F2 parameter bundle: sum (a)_{i+j} (b1)_i (b2)_j / ((c1)_i (c2)_j i! j!) x^i y^j.
struct AppellF2Spec {
  Complex a, b1, b2, c1, c2;
  AppellF2Spec(Complex a_, Complex b1_, Complex b2_, Complex c1_, Complex c2_);
};

/// Horn-type double series with joint parameter entering as (alpha)_{m-n}:
/// sum (alpha)_{m-n} (beta)_m (gamma)_n (delta)_n / ((eps)_m m! n!) x^m y^n.
struct HornH2Spec {
  Complex alpha, beta, gamma, delta, epsilon;
  HornH2Spec(Complex al, Complex be, Complex ga, Complex de, Complex ep);
};

/// Kampe de Feriet parameter groups: joint indices r+s, row index r, column
/// index s, each with a numerator and denominator list.
struct KdFSpec {
  std::vector<Complex> joint_num, row_num, col_num;
  std::vector<Complex> joint_den, row_den, col_den;
  KdFSpec(std::vector<Complex> jn, std::vector<Complex> rn, std::vector<Complex> cn,
          std::vector<Complex> jd, std::vector<Complex> rd, std::vector<Complex> cd);
};

enum class F2Strategy { Diagonal, IteratedInner2F1 };

/// Appell F2 evaluation. Diagonal sums anti-diagonals and requires
/// |x| + |y| < 1. IteratedInner2F1 collapses one index into a Gauss function
/// and monitors the outer terms; it reaches boundary and continued argument
/// pairs, reporting failure through converged = false.
SeriesResult eval_appell_f2(const AppellF2Spec& spec, const Complex& x,
                            const Complex& y, double tol, F2Strategy strategy,
                            long max_terms = 40000);

SeriesResult eval_horn_h2(const HornH2Spec& spec, const Complex& x,
                          const Complex& y, double tol, long max_terms = 100000);

SeriesResult eval_kdf(const KdFSpec& spec, const Complex& x, const Complex& y,
                      double tol, long max_terms = 100000);

}  // namespace hyperseries
