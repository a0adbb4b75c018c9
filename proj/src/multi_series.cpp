#include "hyperseries/multi_series.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "hyperseries/twof1.hpp"

namespace hyperseries {

namespace {

void check_denominator_param(const Complex& c, const char* what) {
  require_finite(c, what);
  if (is_nonpositive_integer(c))
    throw PoleError(std::string(what) + " is zero or a negative integer");
}

// Monitored accumulation for series whose terms may decay only as a power
// law (boundary evaluation). On top of the usual 3-small-terms rule it
// estimates the decay exponent from windowed means and gives up early when
// the tail is clearly unsummable.
class MonitoredSum {
 public:
  MonitoredSum(double tol, long max_terms) : tol_(tol), max_terms_(max_terms) {}

  // Feeds one term; returns false when accumulation should stop.
  bool feed(const Complex& t) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw OverflowError("monitored sum: non-finite term");
    acc_.add(t);
    ++count_;
    double mag = std::abs(t);
    window_sum_ += mag;
    if (count_ % kWindow == 0) {
      double mean = window_sum_ / kWindow;
      if (prev_window_mean_ > 0.0 && count_ >= 2048 &&
          mean > tol_ * (1.0 + std::abs(acc_.value()))) {
        double jr = (double)count_ / (double)(count_ - kWindow);
        double e = std::log(mean / prev_window_mean_) / std::log(jr);
        if (e > -1.2) {
          diverged_ = true;
          return false;
        }
      }
      prev_window_mean_ = mean;
      window_sum_ = 0.0;
    }
    double scale = 1.0 + std::abs(acc_.value());
    if (mag < tol_ * scale) {
      run_max_ = std::max(run_max_, mag);
      if (++small_run_ >= 3) {
        converged_ = true;
        return false;
      }
    } else {
      small_run_ = 0;
      run_max_ = 0.0;
    }
    return count_ < max_terms_;
  }

  SeriesResult result() const {
    SeriesResult r;
    r.value = acc_.value();
    r.terms_used = count_;
    double scale = 1.0 + std::abs(r.value);
    r.tail_estimate = converged_ ? run_max_ / scale : 1.0;
    r.converged = converged_;
    return r;
  }

 private:
  static constexpr long kWindow = 256;
  CompensatedSum acc_;
  double tol_;
  long max_terms_;
  long count_ = 0;
  int small_run_ = 0;
  double run_max_ = 0.0;
  double window_sum_ = 0.0;
  double prev_window_mean_ = -1.0;
  bool converged_ = false;
  bool diverged_ = false;
};

}  // namespace

AppellF2Spec::AppellF2Spec(Complex a_, Complex b1_, Complex b2_, Complex c1_,
                           Complex c2_)
    : a(a_), b1(b1_), b2(b2_), c1(c1_), c2(c2_) {
  require_finite(a, "AppellF2Spec a");
  require_finite(b1, "AppellF2Spec b1");
  require_finite(b2, "AppellF2Spec b2");
  check_denominator_param(c1, "AppellF2Spec c1");
  check_denominator_param(c2, "AppellF2Spec c2");
}

HornH2Spec::HornH2Spec(Complex al, Complex be, Complex ga, Complex de, Complex ep)
    : alpha(al), beta(be), gamma(ga), delta(de), epsilon(ep) {
  require_finite(alpha, "HornH2Spec alpha");
  require_finite(beta, "HornH2Spec beta");
  require_finite(gamma, "HornH2Spec gamma");
  require_finite(delta, "HornH2Spec delta");
  check_denominator_param(epsilon, "HornH2Spec epsilon");
}

KdFSpec::KdFSpec(std::vector<Complex> jn, std::vector<Complex> rn,
                 std::vector<Complex> cn, std::vector<Complex> jd,
                 std::vector<Complex> rd, std::vector<Complex> cd)
    : joint_num(std::move(jn)), row_num(std::move(rn)), col_num(std::move(cn)),
      joint_den(std::move(jd)), row_den(std::move(rd)), col_den(std::move(cd)) {
  for (auto& v : {joint_num, row_num, col_num})
    for (const Complex& z : v) require_finite(z, "KdFSpec numerator");
  for (auto& v : {joint_den, row_den, col_den})
    for (const Complex& z : v) check_denominator_param(z, "KdFSpec denominator");
}

// ---------------------------------------------------------------- Appell F2

namespace {

SeriesResult f2_diagonal(const AppellF2Spec& s, const Complex& x,
                         const Complex& y, double tol, long max_terms) {
  if (std::abs(x) + std::abs(y) >= 1.0)
    throw DomainError("eval_appell_f2: Diagonal strategy needs |x| + |y| < 1");
  // Anti-diagonal sums, each one a short inner loop in i.
  long cap = std::max<long>(64, (long)std::sqrt((double)max_terms) * 4);
  Complex poch_a{1.0, 0.0};  // (a)_N
  auto diag = [&](long N) -> Complex {
    if (N > 0) poch_a *= s.a + (double)(N - 1);
    CompensatedSum row;
    // i = 0 term: (b2)_N / ((c2)_N N!) y^N
    Complex t{1.0, 0.0};
    for (long k = 0; k < N; ++k)
      t *= (s.b2 + (double)k) * y / ((s.c2 + (double)k) * (double)(k + 1));
    t *= poch_a;
    row.add(t);
    for (long i = 1; i <= N; ++i) {
      long j = N - i;  // after increment
      // move one slot from the y-index to the x-index
      t *= (s.b1 + (double)(i - 1)) * (s.c2 + (double)j) * (double)(j + 1) * x /
           ((s.c1 + (double)(i - 1)) * (s.b2 + (double)j) * (double)i * y);
      row.add(t);
    }
    return row.value();
  };
  return accumulate_series(diag, tol, cap);
}

// Complex value together with a power-of-two exponent; the iterated F2 sums
// pair an exponentially growing inner value with an exponentially decaying
// outer coefficient, and only the product fits in double range.
struct ScaledC {
  Complex m{0.0, 0.0};
  long e = 0;

  void normalize() {
    double mag = std::abs(m);
    if (mag == 0.0 || !std::isfinite(mag)) {
      e = 0;
      return;
    }
    int k = std::ilogb(mag);
    m = Complex(std::ldexp(m.real(), -k), std::ldexp(m.imag(), -k));
    e += k;
  }
  Complex to_complex() const {
    long ee = std::max<long>(std::min<long>(e, 2000), -2000);
    return Complex(std::ldexp(m.real(), (int)ee), std::ldexp(m.imag(), (int)ee));
  }
};

ScaledC scaled_mul(const ScaledC& a, const ScaledC& b) {
  ScaledC r{a.m * b.m, a.e + b.e};
  r.normalize();
  return r;
}

// Direct Gauss series at real z in (0,1) with rescaling; the partial sums may
// pass through ~ (1-z)^{-a} which overflows double for large a.
ScaledC scaled_series_2f1_pos(double a, double b, double c, double z) {
  double term = 1.0, sum = 0.0;
  long e = 0;
  int small_run = 0;
  long cap = 200000 + (long)(4.0 * std::abs(a) * z / (1.0 - z));
  for (long m = 0; m < cap; ++m) {
    sum += term;
    double mag = std::abs(sum);
    if (mag > 1e280) {
      sum = std::ldexp(sum, -512);
      term = std::ldexp(term, -512);
      e += 512;
      mag = std::abs(sum);
    }
    if (std::abs(term) < 1e-16 * (1.0 + mag)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    term *= (a + m) * (b + m) * z / ((c + m) * (m + 1));
  }
  ScaledC r{Complex(sum, 0.0), e};
  r.normalize();
  return r;
}

// 2F1(a, b; c; z) for large positive a and real z < 0 through the
// 1/(1-z) connection; both pieces stay in double range.
ScaledC scaled_2f1_large_a_negz(double a, double b, double c, double z) {
  double w = 1.0 / (1.0 - z);
  auto lg = [](double x) {
    double l;
    int s;
    lgamma_signed(x, l, s);
    return std::pair<double, int>(l, s);
  };
  auto series = [&](double p1, double p2, double p3) {
    double term = 1.0, sum = 0.0;
    int small_run = 0;
    for (long m = 0; m < 100000; ++m) {
      sum += term;
      if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
      term *= (p1 + m) * (p2 + m) * w / ((p3 + m) * (m + 1));
    }
    return sum;
  };
  auto [lc, sc] = lg(c);
  auto [lba, sba] = lg(b - a);
  auto [lb, sb] = lg(b);
  auto [lca, sca] = lg(c - a);
  auto [lab, sab] = lg(a - b);
  auto [la, sa] = lg(a);
  auto [lcb, scb] = lg(c - b);
  double log1mz = std::log1p(-z);
  double L1 = lc + lba - lb - lca - a * log1mz;
  double L2 = lc + lab - la - lcb - b * log1mz;
  int sg1 = sc * sba * sb * sca;
  int sg2 = sc * sab * sa * scb;
  double S1 = series(a, c - b, a - b + 1.0);
  double S2 = series(b, c - a, b - a + 1.0);
  // Combine on the larger scale.
  double L = std::max(L1, L2);
  double val = sg1 * S1 * std::exp(L1 - L) + sg2 * S2 * std::exp(L2 - L);
  ScaledC r{Complex(val, 0.0), 0};
  double e2 = L / std::log(2.0);
  r.e = (long)e2;
  r.m = Complex(val * std::exp(L - r.e * std::log(2.0)), 0.0);
  r.normalize();
  return r;
}

ScaledC scaled_inner_2f1(const Complex& a, const Complex& b, const Complex& c,
                         const Complex& z, double inner_tol) {
  bool all_real = a.imag() == 0.0 && b.imag() == 0.0 && c.imag() == 0.0 &&
                  z.imag() == 0.0;
  bool terminating = is_nonpositive_integer(b);
  if (all_real && !terminating) {
    double ar = a.real(), zr = z.real();
    if (zr > 0.0 && zr < 1.0 - 1e-12) {
      ScaledC r = scaled_series_2f1_pos(ar, b.real(), c.real(), zr);
      return r;
    }
    if (zr < 0.0 && ar > 60.0 && !is_integer_valued(a - b))
      return scaled_2f1_large_a_negz(ar, b.real(), c.real(), zr);
  }
  ScaledC r{eval_2f1(a, b, c, z, inner_tol), 0};
  r.normalize();
  return r;
}

// Generates 2F1(a0 + j, b; c; z) for j = 0, 1, 2, ... by the Gauss
// contiguous recurrence in the first parameter, with power-of-two rescaling.
// Used where the shifted function is the dominant recurrence solution
// (|z| > 1, or z < 0), so forward recursion is stable.
class ShiftedGaussSequence {
 public:
  ShiftedGaussSequence(Complex a0, Complex b, Complex c, Complex z, double tol)
      : a0_(a0), b_(b), c_(c), z_(z) {
    prev_ = {eval_2f1(a0, b, c, z, tol), 0};
    prev_.normalize();
    cur_ = {eval_2f1(a0 + 1.0, b, c, z, tol), 0};
    cur_.normalize();
  }

  ScaledC at(long j) {
    if (j == 0) return prev_;
    if (j == 1) return cur_;
    while (emitted_ < j) advance();
    return cur_;
  }

 private:
  void advance() {
    // (c-a)F(a-1) + (2a - c + (b-a)z)F(a) + a(z-1)F(a+1) = 0 at a = a0+k
    Complex a = a0_ + (double)(emitted_);
    long de = cur_.e - prev_.e;
    Complex prev_m = de > 300 ? Complex(0.0, 0.0)
                              : Complex(std::ldexp(prev_.m.real(), (int)-de),
                                        std::ldexp(prev_.m.imag(), (int)-de));
    Complex next = ((c_ - a) * prev_m + (2.0 * a - c_ + (b_ - a) * z_) * cur_.m) /
                   (a * (1.0 - z_));
    prev_ = cur_;
    cur_ = {next, prev_.e};
    cur_.normalize();
    ++emitted_;
  }

  Complex a0_, b_, c_, z_;
  ScaledC prev_, cur_;
  long emitted_ = 1;
};

SeriesResult f2_iterated_oriented(const Complex& a, const Complex& b_in,
                                  const Complex& c_in, const Complex& u,
                                  const Complex& b_out, const Complex& c_out,
                                  const Complex& v, double tol, long max_terms) {
  // sum_j (a)_j (b_out)_j / ((c_out)_j j!) v^j * 2F1(a+j, b_in; c_in; u)
  MonitoredSum acc(tol, max_terms);
  ScaledC coef{Complex(1.0, 0.0), 0};
  double inner_tol = std::max(tol * 1e-3, 1e-15);
  // On the cut the per-shift continuation splits into hugely cancelling
  // pieces; the contiguous recurrence carries the values instead.
  bool use_recurrence = u.imag() == 0.0 && u.real() > 1.0 + 1e-12 &&
                        !is_nonpositive_integer(b_in);
  std::optional<ShiftedGaussSequence> seq;
  if (use_recurrence) seq.emplace(a, b_in, c_in, u, inner_tol);
  for (long j = 0;; ++j) {
    ScaledC inner = use_recurrence
                        ? seq->at(j)
                        : scaled_inner_2f1(a + (double)j, b_in, c_in, u, inner_tol);
    ScaledC st = scaled_mul(coef, inner);
    Complex term = st.e < -1080 ? Complex(0.0, 0.0) : st.to_complex();
    if (st.e > 900)
      throw OverflowError("eval_appell_f2: iterated terms grow without bound");
    if (!acc.feed(term)) break;
    coef.m *= (a + (double)j) * (b_out + (double)j) * v /
              ((c_out + (double)j) * (double)(j + 1));
    coef.normalize();
  }
  return acc.result();
}

}  // namespace

namespace {

// One-index collapse: F2 with x or y at zero is a Gauss series.
SeriesResult f2_single_index(const Complex& a, const Complex& b, const Complex& c,
                             const Complex& z, double tol, long max_terms) {
  Complex term{1.0, 0.0};
  auto gen = [&](long m) -> Complex {
    Complex t = term;
    term *= (a + (double)m) * (b + (double)m) * z /
            ((c + (double)m) * (double)(m + 1));
    return t;
  };
  return accumulate_series(gen, tol, max_terms);
}

}  // namespace

SeriesResult eval_appell_f2(const AppellF2Spec& spec, const Complex& x,
                            const Complex& y, double tol, F2Strategy strategy,
                            long max_terms) {
  require_finite(x, "eval_appell_f2 x");
  require_finite(y, "eval_appell_f2 y");
  if (!(tol > 0)) throw DomainError("eval_appell_f2: tol must be positive");

  if (y == Complex(0.0, 0.0) || x == Complex(0.0, 0.0)) {
    bool use_x = y == Complex(0.0, 0.0);
    const Complex& arg = use_x ? x : y;
    if (strategy == F2Strategy::Diagonal && std::abs(arg) >= 1.0)
      throw DomainError("eval_appell_f2: Diagonal strategy needs |x| + |y| < 1");
    if (std::abs(arg) >= 1.0)
      throw DomainError("eval_appell_f2: collapsed series needs |argument| < 1");
    return use_x ? f2_single_index(spec.a, spec.b1, spec.c1, x, tol, max_terms)
                 : f2_single_index(spec.a, spec.b2, spec.c2, y, tol, max_terms);
  }

  if (strategy == F2Strategy::Diagonal)
    return f2_diagonal(spec, x, y, tol, max_terms);

  // Iterated strategy: pick which index is collapsed into the inner Gauss
  // function. The inner argument must be evaluable for every shift of its
  // joint parameter; an argument at 1 can only sit on the outer side.
  double ru = std::abs(x), rv = std::abs(y);
  bool u_at_one = std::abs(x - Complex(1.0, 0.0)) < 1e-9;
  bool v_at_one = std::abs(y - Complex(1.0, 0.0)) < 1e-9;
  if (u_at_one && v_at_one)
    throw DomainError("eval_appell_f2: both arguments at the unit point");
  if (ru >= 1.0 - 1e-12 && rv >= 1.0 - 1e-12 && !u_at_one && !v_at_one) {
    if (std::min(ru, rv) >= 1.0 + 1e-12)
      throw DomainError("eval_appell_f2: both arguments outside the unit disk");
  }

  bool outer_is_x;
  if (u_at_one) {
    outer_is_x = true;
  } else if (v_at_one) {
    outer_is_x = false;
  } else if (ru >= 1.0) {
    outer_is_x = false;  // big argument goes to the continued inner
  } else if (rv >= 1.0) {
    outer_is_x = true;
  } else {
    double r_outer_y = rv / std::abs(1.0 - x);
    double r_outer_x = ru / std::abs(1.0 - y);
    outer_is_x = r_outer_x <= r_outer_y;
  }

  if (outer_is_x)
    return f2_iterated_oriented(spec.a, spec.b2, spec.c2, y, spec.b1, spec.c1,
                                x, tol, max_terms);
  return f2_iterated_oriented(spec.a, spec.b1, spec.c1, x, spec.b2, spec.c2, y,
                              tol, max_terms);
}

// ------------------------------------------------------------------ Horn H2

SeriesResult eval_horn_h2(const HornH2Spec& spec, const Complex& x,
                          const Complex& y, double tol, long max_terms) {
  require_finite(x, "eval_horn_h2 x");
  require_finite(y, "eval_horn_h2 y");
  if (std::abs(x) >= 1.0)
    throw DomainError("eval_horn_h2: |x| must be < 1");
  long cap = std::max<long>(64, (long)std::sqrt((double)max_terms));

  // m-major, n inner; (alpha)_{m-n} tracked by dividing out (alpha + m - n).
  // Leading coefficient, inner terms, and row sums all carry power-of-two
  // exponents: the inner terms dip far below the row scale before the mass
  // arrives around n ~ m, and the full span exceeds double range.
  ScaledC lead{Complex(1.0, 0.0), 0};
  MonitoredSum rows(tol, cap);
  bool inner_diverged = false;
  for (long m = 0;; ++m) {
    ScaledC term = lead;  // n = 0 term of the full row
    ScaledC row{Complex(0.0, 0.0), 0};
    int small = 0;
    int growing = 0;
    long prev_e = 0;
    double prev_m = -1.0;
    bool have_prev = false;
    // with y against x the inner ratio stays above one until n ~ several m;
    // budget the full hump plus a geometric tail
    long inner_cap = std::max<long>(cap, 8 * m + 256);
    for (long n = 0; n < inner_cap; ++n) {
      if (!std::isfinite(std::abs(term.m))) {
        inner_diverged = true;
        break;
      }
      // row += term, aligned on the larger scale
      if (row.m == Complex(0.0, 0.0)) {
        row = term;
      } else if (term.e >= row.e) {
        long de = term.e - row.e;
        row.m = term.m + (de > 1060 ? Complex(0.0, 0.0)
                                    : Complex(std::ldexp(row.m.real(), (int)-de),
                                              std::ldexp(row.m.imag(), (int)-de)));
        row.e = term.e;
        row.normalize();
      } else {
        long de = row.e - term.e;
        if (de <= 1060)
          row.m += Complex(std::ldexp(term.m.real(), (int)-de),
                           std::ldexp(term.m.imag(), (int)-de));
        row.normalize();
      }
      // magnitude comparisons on the shared exponent scale
      bool term_below_tol =
          term.e - row.e < -60 ||
          (term.e - row.e < 60 &&
           std::ldexp(std::abs(term.m), (int)std::max<long>(term.e - row.e, -1000)) <
               tol * 1e-2 * (1.0 + std::abs(row.m)));
      bool term_decaying =
          have_prev && (term.e < prev_e ||
                        (term.e == prev_e && std::abs(term.m) <= prev_m));
      // the (alpha)_{m-n} factor changes regime around n = m and the row
      // mass can arrive well after it; only stop on the decaying tail
      if (term_below_tol && n > m + 16 && term_decaying) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
      bool term_growing = have_prev && (term.e > prev_e + 20) &&
                          term.e > row.e + 20;
      if (term_growing) {
        if (++growing >= 50) {  // inner terms grow without bound
          inner_diverged = true;
          break;
        }
      } else {
        growing = 0;
      }
      prev_e = term.e;
      prev_m = std::abs(term.m);
      have_prev = true;
      Complex div = spec.alpha + (double)(m - n - 1);
      if (std::abs(div) == 0.0)
        throw PoleError("eval_horn_h2: (alpha)_{m-n} reflection pole");
      term.m *= (spec.gamma + (double)n) * (spec.delta + (double)n) * y /
                ((double)(n + 1) * div);
      term.normalize();
    }
    if (inner_diverged) break;
    if (row.e > 900)
      throw OverflowError("eval_horn_h2: row magnitudes grow without bound");
    Complex row_value = row.e < -1080 ? Complex(0.0, 0.0) : row.to_complex();
    if (!rows.feed(row_value)) break;
    lead.m *= (spec.alpha + (double)m) * (spec.beta + (double)m) * x /
              ((spec.epsilon + (double)m) * (double)(m + 1));
    lead.normalize();
  }
  SeriesResult res = rows.result();
  if (inner_diverged) res.converged = false;
  return res;
}

// ---------------------------------------------------------------------- KdF

SeriesResult eval_kdf(const KdFSpec& spec, const Complex& x, const Complex& y,
                      double tol, long max_terms) {
  require_finite(x, "eval_kdf x");
  require_finite(y, "eval_kdf y");
  long cap = std::max<long>(64, (long)std::sqrt((double)max_terms) * 2);

  // Row and column coefficient sequences extend by one entry per diagonal;
  // the joint factor grows factorially and the row/column entries decay the
  // same way, so all three carry power-of-two exponents.
  std::vector<ScaledC> U{{Complex(1.0, 0.0), 0}};  // prod(b)_r/(prod(beta)_r r!) x^r
  std::vector<ScaledC> V{{Complex(1.0, 0.0), 0}};  // prod(c)_s/(prod(gamma)_s s!) y^s
  ScaledC joint{Complex(1.0, 0.0), 0};             // prod(a)_T / prod(alpha)_T

  MonitoredSum diag(tol, cap);
  bool overflowed = false;
  for (long T = 0;; ++T) {
    if (T > 0) {
      for (const Complex& a : spec.joint_num) joint.m *= a + (double)(T - 1);
      for (const Complex& d : spec.joint_den) joint.m /= d + (double)(T - 1);
      joint.normalize();
      ScaledC u = U.back();
      for (const Complex& b : spec.row_num) u.m *= b + (double)(T - 1);
      for (const Complex& d : spec.row_den) u.m /= d + (double)(T - 1);
      u.m *= x / (double)T;
      u.normalize();
      U.push_back(u);
      ScaledC v = V.back();
      for (const Complex& ci : spec.col_num) v.m *= ci + (double)(T - 1);
      for (const Complex& d : spec.col_den) v.m /= d + (double)(T - 1);
      v.m *= y / (double)T;
      v.normalize();
      V.push_back(v);
    }
    // Anti-diagonal sum on the largest product scale.
    long emax = -4000000;
    for (long r = 0; r <= T; ++r) {
      if (U[r].m == Complex(0.0, 0.0) || V[T - r].m == Complex(0.0, 0.0)) continue;
      emax = std::max(emax, U[r].e + V[T - r].e);
    }
    ScaledC row{Complex(0.0, 0.0), 0};
    if (emax > -4000000) {
      CompensatedSum acc;
      for (long r = 0; r <= T; ++r) {
        long de = U[r].e + V[T - r].e - emax;
        if (de < -200) continue;
        Complex p = U[r].m * V[T - r].m;
        acc.add(Complex(std::ldexp(p.real(), (int)de), std::ldexp(p.imag(), (int)de)));
      }
      row = {acc.value(), emax};
      row.normalize();
    }
    ScaledC st = scaled_mul(joint, row);
    if (st.e > 830) {  // genuinely divergent double series
      overflowed = true;
      break;
    }
    Complex term = st.e < -1080 ? Complex(0.0, 0.0) : st.to_complex();
    if (!diag.feed(term)) break;
  }
  SeriesResult res = diag.result();
  if (overflowed) res.converged = false;
  return res;
}

}  // namespace hyperseries
