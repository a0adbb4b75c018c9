#include "hyperseries/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace hyperseries {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, also rotating a row
// vector z so that z[i]^2 gives the first eigenvector components.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& z) {
  int n = (int)d.size();
  if (n == 1) return;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 1e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 60) throw HsError("tridiag_ql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

QuadratureRule rule_from_recurrence(std::vector<double> diag,
                                    std::vector<double> offdiag, double mu0) {
  int n = (int)diag.size();
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiag_ql(diag, offdiag, z);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return diag[a] < diag[b]; });
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = diag[idx[i]];
    r.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
  }
  return r;
}

double beta_real(double a, double b) {
  double la, lb, lab;
  int sa, sb, sab;
  lgamma_signed(a, la, sa);
  lgamma_signed(b, lb, sb);
  lgamma_signed(a + b, lab, sab);
  return sa * sb * sab * std::exp(la + lb - lab);
}

}  // namespace

QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw DomainError("gauss_laguerre: need at least one node");
  if (alpha <= -1.0) throw DomainError("gauss_laguerre: alpha must exceed -1");
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) d[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(k * (k + alpha));
  double mu0 = std::tgamma(alpha + 1.0);
  QuadratureRule r = rule_from_recurrence(std::move(d), std::move(e), mu0);
  r.kind = RuleKind::GaussLaguerre;
  return r;
}

QuadratureRule gauss_jacobi01(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi01: need at least one node");
  if (a <= -1.0 || b <= -1.0)
    throw DomainError("gauss_jacobi01: exponents must exceed -1");
  // Weight (1-t)^A (1+t)^B on (-1,1) with A = b, B = a maps to s^a (1-s)^b.
  double A = b, B = a;
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  double apb = A + B;
  d[0] = (B - A) / (apb + 2.0);
  for (int k = 1; k < n; ++k) {
    double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
    d[k] = (B * B - A * A) / den;
  }
  for (int k = 1; k < n; ++k) {
    double num, den;
    if (k == 1) {
      num = 4.0 * (A + 1.0) * (B + 1.0);
      den = (apb + 2.0) * (apb + 2.0) * (apb + 3.0);
    } else {
      num = 4.0 * k * (k + A) * (k + B) * (k + apb);
      den = (2.0 * k + apb) * (2.0 * k + apb) * (2.0 * k + apb + 1.0) *
            (2.0 * k + apb - 1.0);
    }
    e[k - 1] = std::sqrt(num / den);
  }
  double mu0 = std::pow(2.0, apb + 1.0) * beta_real(A + 1.0, B + 1.0);
  QuadratureRule r = rule_from_recurrence(std::move(d), std::move(e), mu0);
  // Map (-1,1) -> (0,1): s = (1+t)/2, ds-weight scale 2^{-(a+b+1)}.
  double scale = std::pow(2.0, -(a + b + 1.0));
  for (auto& x : r.nodes) x = 0.5 * (1.0 + x);
  for (auto& w : r.weights) w *= scale;
  r.kind = RuleKind::GaussLegendre;
  return r;
}

QuadratureRule gauss_legendre01(int n) { return gauss_jacobi01(n, 0.0, 0.0); }

QuadratureRule build_rule(RuleKind kind, int n_points) {
  if (n_points < 1) throw DomainError("build_rule: n_points must be positive");
  switch (kind) {
    case RuleKind::GaussLaguerre:
      return gauss_laguerre(n_points, 0.0);
    case RuleKind::GaussLegendre:
      return gauss_legendre01(n_points);
  }
  throw DomainError("build_rule: unknown kind");
}

// -------------------------------------------------------- stable kernels ---

double hyp1f1_neg(double a, double b, double u) {
  if (u < 0) throw DomainError("hyp1f1_neg: u must be >= 0");
  if (u <= 35.0) {
    // Kummer map: e^{-u} 1F1(b-a; b; u); terms are eventually single-signed.
    double term = 1.0, sum = 1.0;
    for (long m = 0; m < 4000; ++m) {
      term *= (b - a + m) * u / ((b + m) * (m + 1));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum) && m > 4) break;
    }
    return std::exp(-u) * sum;
  }
  // Algebraic large-argument expansion; the e^{-u} companion is below the
  // double-precision floor for u > 35.
  double term = 1.0, sum = 1.0, prev = std::abs(term);
  for (long k = 1; k <= 80; ++k) {
    term *= (a + k - 1) * (a - b + k) / (k * u);
    if (std::abs(term) > prev) break;  // asymptotic tail turned around
    prev = std::abs(term);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  double lg, lgba;
  int sg, sgba;
  lgamma_signed(b, lg, sg);
  lgamma_signed(b - a, lgba, sgba);
  return sg * sgba * std::exp(lg - lgba - a * std::log(u)) * sum;
}

double hyp0f1_neg(double b, double t) {
  if (t < 0) throw DomainError("hyp0f1_neg: t must be >= 0");
  if (t <= 130.0) {
    double term = 1.0, sum = 1.0;
    for (long m = 0; m < 4000; ++m) {
      term *= -t / ((b + m) * (m + 1));
      sum += term;
      if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum)) && m > 4) break;
    }
    return sum;
  }
  // 0F1(b; -t) = Gamma(b) t^{(1-b)/2} J_{b-1}(2 sqrt t), Hankel asymptotics.
  double nu = b - 1.0;
  double xarg = 2.0 * std::sqrt(t);
  double mu = 4.0 * nu * nu;
  double P = 1.0, Q = (mu - 1.0) / (8.0 * xarg);
  double term = Q;
  double prevP = 1.0, prevQ = std::abs(Q);
  for (int k = 1; k <= 40; ++k) {
    // extend the product (mu - 1^2)(mu - 3^2)... two factors at a time;
    // a_m carries 1/m!, so the chain divides by 2k then 2k+1
    double f1 = mu - (4.0 * k - 1.0) * (4.0 * k - 1.0);
    double f2 = mu - (4.0 * k + 1.0) * (4.0 * k + 1.0);
    term *= f1 / ((2.0 * k) * 8.0 * xarg);
    double pterm = (k % 2 ? -term : term);
    if (std::abs(term) > prevP) break;
    prevP = std::abs(term);
    P += pterm;
    term *= f2 / ((2.0 * k + 1.0) * 8.0 * xarg);
    double qterm = (k % 2 ? -term : term);
    if (std::abs(term) > prevQ) break;
    prevQ = std::abs(term);
    Q += qterm;
  }
  double chi = xarg - nu * M_PI / 2.0 - M_PI / 4.0;
  double J = std::sqrt(2.0 / (M_PI * xarg)) * (P * std::cos(chi) - Q * std::sin(chi));
  double lg;
  int sg;
  lgamma_signed(b, lg, sg);
  return sg * std::exp(lg + (1.0 - b) / 2.0 * std::log(t)) * J;
}

namespace {

// integral over (0,1) of s^{p-1}(1-s)^{q-p-1} f(u*s), normalized by B(p, q-p),
// with the interval split so the kernel's fast initial decay is resolved.
template <class F>
double lowered_integral(double p, double qminusp, double u, int n, F&& f) {
  double s0 = u > 35.0 ? 35.0 / u : 1.0;
  if (s0 >= 1.0) {
    QuadratureRule r = gauss_jacobi01(n, p - 1.0, qminusp - 1.0);
    double acc = 0.0;
    for (size_t k = 0; k < r.nodes.size(); ++k)
      acc += r.weights[k] * f(u * r.nodes[k]);
    return acc / beta_real(p, qminusp);
  }
  double acc = 0.0;
  {  // [0, s0]: fold s^{p-1}, the (1-s) power is smooth here
    QuadratureRule r = gauss_jacobi01(n, p - 1.0, 0.0);
    double piece = 0.0;
    for (size_t k = 0; k < r.nodes.size(); ++k) {
      double s = s0 * r.nodes[k];
      piece += r.weights[k] * std::pow(1.0 - s, qminusp - 1.0) * f(u * s);
    }
    acc += piece * std::pow(s0, p);
  }
  {  // [s0, 1]: fold (1-s)^{q-p-1}, the s power is smooth here
    QuadratureRule r = gauss_jacobi01(n, 0.0, qminusp - 1.0);
    double piece = 0.0;
    for (size_t k = 0; k < r.nodes.size(); ++k) {
      double s = s0 + (1.0 - s0) * r.nodes[k];
      piece += r.weights[k] * std::pow(s, p - 1.0) * f(u * s);
    }
    acc += piece * std::pow(1.0 - s0, qminusp);
  }
  return acc / beta_real(p, qminusp);
}

bool pick_lowering_pair(double a1, double a2, double b1, double b2,
                        double& lower_a, double& lower_b, double& keep_a,
                        double& keep_b) {
  struct Cand {
    double la, lb, ka, kb;
  };
  Cand cands[4] = {{a2, b2, a1, b1}, {a2, b1, a1, b2}, {a1, b2, a2, b1},
                   {a1, b1, a2, b2}};
  for (const Cand& c : cands) {
    if (c.lb > c.la && c.la > 0.0) {
      lower_a = c.la;
      lower_b = c.lb;
      keep_a = c.ka;
      keep_b = c.kb;
      return true;
    }
  }
  return false;
}

double pfq_series_real(const std::vector<double>& up,
                       const std::vector<double>& low, double z) {
  double term = 1.0, sum = 1.0;
  for (long m = 0; m < 200000; ++m) {
    double ratio = z / (m + 1);
    for (double a : up) ratio *= a + m;
    for (double b : low) ratio /= b + m;
    term *= ratio;
    sum += term;
    if (std::abs(term) < 1e-16 * (1.0 + std::abs(sum)) && m > 4) return sum;
  }
  return sum;
}

}  // namespace

double hyp2f2_neg(double a1, double a2, double b1, double b2, double u, int n) {
  if (u < 0) throw DomainError("hyp2f2_neg: u must be >= 0");
  if (u <= 20.0) return pfq_series_real({a1, a2}, {b1, b2}, -u);
  double la, lb, ka, kb;
  if (!pick_lowering_pair(a1, a2, b1, b2, la, lb, ka, kb))
    throw DomainError("hyp2f2_neg: no parameter pair with b > a > 0");
  return lowered_integral(la, lb - la, u, n,
                          [&](double arg) { return hyp1f1_neg(ka, kb, arg); });
}

double hyp1f2_neg(double a1, double b1, double b2, double u, int n) {
  if (u < 0) throw DomainError("hyp1f2_neg: u must be >= 0");
  if (u <= 150.0) return pfq_series_real({a1}, {b1, b2}, -u);
  double la, lb, kb;
  if (b2 > a1 && a1 > 0.0) {
    la = a1;
    lb = b2;
    kb = b1;
  } else if (b1 > a1 && a1 > 0.0) {
    la = a1;
    lb = b1;
    kb = b2;
  } else {
    throw DomainError("hyp1f2_neg: no parameter pair with b > a > 0");
  }
  return lowered_integral(la, lb - la, u, n,
                          [&](double arg) { return hyp0f1_neg(kb, arg); });
}

// --------------------------------------------------- integral operations ---

namespace {

void check_clausen_shape(const HyperSpec& f32) {
  if (f32.p() != 3 || f32.q() != 2)
    throw DomainError("integral representation needs a 3F2 parameter set");
}

double real_or_throw(const Complex& z, const char* what) {
  if (z.imag() != 0.0)
    throw DomainError(std::string(what) + ": integral path needs real values");
  return z.real();
}

// Inner pFq value at a (possibly very negative) real argument, routed to the
// cancellation-free kernels when the alternating direct series would lose
// everything. Positive arguments have single-signed terms and stay direct.
double inner_2f2(double a1, double a2, double b1, double b2, double arg) {
  if (arg >= -20.0) return pfq_series_real({a1, a2}, {b1, b2}, arg);
  return hyp2f2_neg(a1, a2, b1, b2, -arg);
}

double inner_1f2(double a1, double b1, double b2, double arg) {
  if (arg >= -150.0) return pfq_series_real({a1}, {b1, b2}, arg);
  return hyp1f2_neg(a1, b1, b2, -arg);
}

}  // namespace

Complex clausen_via_1d_integral(const HyperSpec& f32, const Complex& x,
                                const QuadratureRule& rule) {
  check_clausen_shape(f32);
  double a1 = real_or_throw(f32.upper()[0], "clausen_via_1d_integral alpha1");
  double a2 = real_or_throw(f32.upper()[1], "clausen_via_1d_integral alpha2");
  double a3 = real_or_throw(f32.upper()[2], "clausen_via_1d_integral alpha3");
  double b1 = real_or_throw(f32.lower()[0], "clausen_via_1d_integral beta1");
  double b2 = real_or_throw(f32.lower()[1], "clausen_via_1d_integral beta2");
  double xr = real_or_throw(x, "clausen_via_1d_integral x");
  if (a1 <= 0.0) throw DomainError("clausen_via_1d_integral: Re alpha1 <= 0");
  if (xr >= 1.0) throw DomainError("clausen_via_1d_integral: Re x >= 1");
  // The xi^{alpha1-1} factor folds into a generalized Laguerre weight.
  QuadratureRule gen = gauss_laguerre((int)rule.nodes.size(), a1 - 1.0);
  double acc = 0.0;
  for (size_t k = 0; k < gen.nodes.size(); ++k)
    acc += gen.weights[k] * inner_2f2(a2, a3, b1, b2, xr * gen.nodes[k]);
  return Complex(acc / std::tgamma(a1), 0.0);
}

Complex clausen_via_2d_integral(const HyperSpec& f32, const Complex& x,
                                const QuadratureRule& rule) {
  check_clausen_shape(f32);
  double a1 = real_or_throw(f32.upper()[0], "clausen_via_2d_integral alpha1");
  double a2 = real_or_throw(f32.upper()[1], "clausen_via_2d_integral alpha2");
  double a3 = real_or_throw(f32.upper()[2], "clausen_via_2d_integral alpha3");
  double b1 = real_or_throw(f32.lower()[0], "clausen_via_2d_integral beta1");
  double b2 = real_or_throw(f32.lower()[1], "clausen_via_2d_integral beta2");
  double xr = real_or_throw(x, "clausen_via_2d_integral x");
  if (a1 <= 0.0 || a2 <= 0.0)
    throw DomainError("clausen_via_2d_integral: Re alpha1, alpha2 must be > 0");
  if (xr >= 1.0) throw DomainError("clausen_via_2d_integral: Re x >= 1");
  QuadratureRule gx = gauss_laguerre((int)rule.nodes.size(), a1 - 1.0);
  QuadratureRule gy = gauss_laguerre((int)rule.nodes.size(), a2 - 1.0);
  double acc = 0.0;
  for (size_t i = 0; i < gx.nodes.size(); ++i) {
    for (size_t j = 0; j < gy.nodes.size(); ++j) {
      if (gx.nodes[i] + gy.nodes[j] > 160.0) continue;  // weight below 1e-69
      acc += gx.weights[i] * gy.weights[j] *
             inner_1f2(a3, b1, b2, xr * gx.nodes[i] * gy.nodes[j]);
    }
  }
  return Complex(acc / (std::tgamma(a1) * std::tgamma(a2)), 0.0);
}

Complex clausen_via_3d_integral(const HyperSpec& f32, const Complex& x,
                                const QuadratureRule& rule) {
  check_clausen_shape(f32);
  double a1 = real_or_throw(f32.upper()[0], "clausen_via_3d_integral alpha1");
  double a2 = real_or_throw(f32.upper()[1], "clausen_via_3d_integral alpha2");
  double a3 = real_or_throw(f32.upper()[2], "clausen_via_3d_integral alpha3");
  double b1 = real_or_throw(f32.lower()[0], "clausen_via_3d_integral beta1");
  double b2 = real_or_throw(f32.lower()[1], "clausen_via_3d_integral beta2");
  double xr = real_or_throw(x, "clausen_via_3d_integral x");
  if (a1 <= 0.0 || a2 <= 0.0 || a3 <= 0.0)
    throw DomainError("clausen_via_3d_integral: Re alpha_i must be > 0");
  if (xr >= 1.0) throw DomainError("clausen_via_3d_integral: Re x >= 1");
  if (std::abs(xr) > 1.0)
    throw DomainError("clausen_via_3d_integral: |x| > 1 loses the kernel");
  QuadratureRule g1 = gauss_laguerre((int)rule.nodes.size(), a1 - 1.0);
  QuadratureRule g2 = gauss_laguerre((int)rule.nodes.size(), a2 - 1.0);
  QuadratureRule g3 = gauss_laguerre((int)rule.nodes.size(), a3 - 1.0);
  double acc = 0.0;
  for (size_t i = 0; i < g1.nodes.size(); ++i)
    for (size_t j = 0; j < g2.nodes.size(); ++j) {
      if (g1.nodes[i] + g2.nodes[j] > 120.0) continue;
      for (size_t k = 0; k < g3.nodes.size(); ++k) {
        double s = g1.nodes[i] + g2.nodes[j] + g3.nodes[k];
        if (s > 120.0) continue;
        double arg = xr * g1.nodes[i] * g2.nodes[j] * g3.nodes[k];
        acc += g1.weights[i] * g2.weights[j] * g3.weights[k] *
               pfq_series_real({}, {b1, b2}, arg);
      }
    }
  return Complex(acc / (std::tgamma(a1) * std::tgamma(a2) * std::tgamma(a3)), 0.0);
}

Complex appell_f2_via_integral(const AppellF2Spec& spec, const Complex& x,
                               const Complex& y, const QuadratureRule& rule) {
  double b1 = real_or_throw(spec.b1, "appell_f2_via_integral b1");
  double b2 = real_or_throw(spec.b2, "appell_f2_via_integral b2");
  double c1 = real_or_throw(spec.c1, "appell_f2_via_integral c1");
  double c2 = real_or_throw(spec.c2, "appell_f2_via_integral c2");
  if (!(c1 > b1 && b1 > 0.0 && c2 > b2 && b2 > 0.0))
    throw DomainError("appell_f2_via_integral: needs Re c_i > Re b_i > 0");
  int n = (int)rule.nodes.size();
  QuadratureRule rx = gauss_jacobi01(n, b1 - 1.0, c1 - b1 - 1.0);
  QuadratureRule ry = gauss_jacobi01(n, b2 - 1.0, c2 - b2 - 1.0);
  Complex acc{0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex kernel = 1.0 - x * rx.nodes[i] - y * ry.nodes[j];
      if (std::abs(kernel) < 1e-12)
        throw SingularIntegrand("appell_f2_via_integral: kernel vanishes at a node");
      acc += rx.weights[i] * ry.weights[j] * std::pow(kernel, -spec.a);
    }
  return acc / (beta_real(b1, c1 - b1) * beta_real(b2, c2 - b2));
}

Complex appell_f2_via_integral_naive(const AppellF2Spec& spec, const Complex& x,
                                     const Complex& y, const QuadratureRule& rule) {
  double b1 = real_or_throw(spec.b1, "appell_f2_via_integral b1");
  double b2 = real_or_throw(spec.b2, "appell_f2_via_integral b2");
  double c1 = real_or_throw(spec.c1, "appell_f2_via_integral c1");
  double c2 = real_or_throw(spec.c2, "appell_f2_via_integral c2");
  if (!(b1 >= 1.0 && b2 >= 1.0 && c1 - b1 >= 1.0 && c2 - b2 >= 1.0))
    throw DomainError("naive F2 integral: endpoint powers must be nonnegative");
  int n = (int)rule.nodes.size();
  QuadratureRule leg = gauss_legendre01(n);
  Complex acc{0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double xi = leg.nodes[i], eta = leg.nodes[j];
      Complex kernel = 1.0 - x * xi - y * eta;
      if (std::abs(kernel) < 1e-12)
        throw SingularIntegrand("naive F2 integral: kernel vanishes at a node");
      acc += leg.weights[i] * leg.weights[j] * std::pow(xi, b1 - 1.0) *
             std::pow(eta, b2 - 1.0) * std::pow(1.0 - xi, c1 - b1 - 1.0) *
             std::pow(1.0 - eta, c2 - b2 - 1.0) * std::pow(kernel, -spec.a);
    }
  return acc / (beta_real(b1, c1 - b1) * beta_real(b2, c2 - b2));
}

}  // namespace hyperseries
