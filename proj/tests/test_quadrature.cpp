#include <cmath>

#include "doctest.h"
#include "hyperseries/quadrature.hpp"
#include "hyperseries/twof1.hpp"
#include "oracles.hpp"

using namespace hyperseries;

namespace {
double relerr(const Complex& got, const Complex& want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}
const HyperSpec kSpec({{0.2, 0}, {0.5, 0}, {0.3, 0}}, {{2.5, 0}, {3.1, 0}});
}  // namespace

TEST_CASE("build_rule classics") {
  SUBCASE("two-point Legendre on (0,1)") {
    QuadratureRule r = build_rule(RuleKind::GaussLegendre, 2);
    double s3 = std::sqrt(3.0);
    CHECK(r.nodes[0] == doctest::Approx((3 - s3) / 6).epsilon(1e-13));
    CHECK(r.nodes[1] == doctest::Approx((3 + s3) / 6).epsilon(1e-13));
    CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.weights[1] == doctest::Approx(0.5).epsilon(1e-13));
  }
  SUBCASE("one-point Laguerre") {
    QuadratureRule r = build_rule(RuleKind::GaussLaguerre, 1);
    CHECK(r.nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("Laguerre weights integrate the weight function") {
    QuadratureRule r = build_rule(RuleKind::GaussLaguerre, 40);
    double sum = 0;
    for (double w : r.weights) sum += w;
    CHECK(std::abs(sum - 1.0) < 1e-13);
    for (size_t i = 1; i < r.nodes.size(); ++i) {
      CHECK(r.nodes[i] > r.nodes[i - 1]);
      CHECK(r.nodes[i] > 0);
    }
    for (double w : r.weights) CHECK(w > 0);
  }
  SUBCASE("generalized Laguerre moments") {
    QuadratureRule r = gauss_laguerre(30, -0.8);
    double m0 = 0, m1 = 0;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
      m0 += r.weights[i];
      m1 += r.weights[i] * r.nodes[i];
    }
    CHECK(std::abs(m0 - std::tgamma(0.2)) < 1e-12 * std::tgamma(0.2));
    CHECK(std::abs(m1 - std::tgamma(1.2)) < 1e-12);
  }
  SUBCASE("Jacobi moments") {
    QuadratureRule r = gauss_jacobi01(25, -0.7, 2.3);
    double m0 = 0;
    for (double w : r.weights) m0 += w;
    double beta = std::tgamma(0.3) * std::tgamma(3.3) / std::tgamma(3.6);
    CHECK(std::abs(m0 - beta) < 1e-12 * beta);
  }
}

TEST_CASE("stable kernels match direct series in overlap") {
  SUBCASE("confluent kernel") {
    for (double u : {5.0, 20.0, 34.0, 40.0, 120.0}) {
      double direct = 0, term = 1;  // alternating reference, fine to u ~ 25
      if (u <= 25) {
        double sum = 1;
        for (int m = 0; m < 400; ++m) {
          term *= (0.5 + m) * (-u) / ((2.5 + m) * (m + 1));
          sum += term;
        }
        direct = sum;
        CHECK(std::abs(hyp1f1_neg(0.5, 2.5, u) - direct) <
              1e-10 * (1 + std::abs(direct)));
      } else {
        // self-consistency across the representation switch at 35
        double v1 = hyp1f1_neg(0.5, 2.5, u * 0.999);
        double v2 = hyp1f1_neg(0.5, 2.5, u * 1.001);
        CHECK(std::abs(v1 - v2) < 0.02 * std::abs(v1));
      }
    }
  }
  SUBCASE("bessel-type kernel on both sides of the representation switch") {
    // references from a 25-digit evaluation
    CHECK(hyp0f1_neg(2.5, 129.9) ==
          doctest::Approx(0.003825340058657528).epsilon(1e-7));
    CHECK(hyp0f1_neg(2.5, 130.1) ==
          doctest::Approx(0.003743146586171733).epsilon(1e-7));
  }
  SUBCASE("lowered 2F2 kernel against the series") {
    double series = 0;
    {
      double term = 1, sum = 1;
      for (int m = 0; m < 300; ++m) {
        term *= (0.5 + m) * (0.3 + m) * (-15.0) /
                ((2.5 + m) * (3.1 + m) * (m + 1));
        sum += term;
      }
      series = sum;
    }
    CHECK(std::abs(hyp2f2_neg(0.5, 0.3, 2.5, 3.1, 15.0) - series) <
          1e-9 * (1 + std::abs(series)));
    // references from a 25-digit evaluation, one per representation side
    CHECK(hyp2f2_neg(0.5, 0.3, 2.5, 3.1, 19.9) ==
          doctest::Approx(0.8170745957618592).epsilon(1e-11));
    CHECK(hyp2f2_neg(0.5, 0.3, 2.5, 3.1, 20.1) ==
          doctest::Approx(0.8160794620112812).epsilon(1e-11));
    CHECK(hyp2f2_neg(0.5, 0.3, 2.5, 3.1, 200.0) ==
          doctest::Approx(0.5570645284374085).epsilon(1e-11));
  }
}

TEST_CASE("clausen integral representations") {
  QuadratureRule r60 = build_rule(RuleKind::GaussLaguerre, 60);
  QuadratureRule r80 = build_rule(RuleKind::GaussLaguerre, 80);
  QuadratureRule r40 = build_rule(RuleKind::GaussLaguerre, 40);
  QuadratureRule r30 = build_rule(RuleKind::GaussLaguerre, 30);
  SUBCASE("single integral against the series") {
    SeriesResult d = eval_pfq(kSpec, {0.4, 0}, 1e-14, 1000000);
    Complex q = clausen_via_1d_integral(kSpec, {0.4, 0}, r60);
    CHECK(relerr(q, d.value) < 1e-8);
  }
  SUBCASE("origin normalizes to one") {
    Complex q = clausen_via_1d_integral(kSpec, {0.0, 0}, r60);
    CHECK(std::abs(q.real() - 1.0) < 1e-12);
    Complex q2 = clausen_via_2d_integral(kSpec, {0.0, 0}, r40);
    CHECK(std::abs(q2.real() - 1.0) < 1e-10);
    Complex q3 = clausen_via_3d_integral(kSpec, {0.0, 0}, r30);
    CHECK(std::abs(q3.real() - 1.0) < 1e-8);
  }
  SUBCASE("self-consistency at two rule sizes far left") {
    Complex a = clausen_via_1d_integral(kSpec, {-3, 0}, r60);
    Complex b = clausen_via_1d_integral(kSpec, {-3, 0}, r80);
    CHECK(relerr(a, b) < 1e-9);
  }
  SUBCASE("double integral against the single one") {
    Complex a = clausen_via_1d_integral(kSpec, {0.4, 0}, r60);
    Complex b = clausen_via_2d_integral(kSpec, {0.4, 0}, r40);
    CHECK(relerr(a, b) < 1e-7);
    Complex c = clausen_via_1d_integral(kSpec, {-2, 0}, r60);
    Complex d = clausen_via_2d_integral(kSpec, {-2, 0}, r40);
    CHECK(relerr(c, d) < 1e-6);
  }
  SUBCASE("triple integral") {
    SeriesResult d = eval_pfq(kSpec, {0.3, 0}, 1e-14, 1000000);
    Complex q = clausen_via_3d_integral(kSpec, {0.3, 0}, r30);
    CHECK(relerr(q, d.value) < 1e-5);
    Complex a = clausen_via_1d_integral(kSpec, {-1, 0}, r60);
    Complex b = clausen_via_3d_integral(kSpec, {-1, 0}, r30);
    CHECK(relerr(a, b) < 1e-5);
  }
  SUBCASE("domain gates") {
    HyperSpec bad({{-0.2, 0}, {0.5, 0}, {0.3, 0}}, {{2.5, 0}, {3.1, 0}});
    CHECK_THROWS_AS(clausen_via_1d_integral(bad, {0.2, 0}, r60), DomainError);
    CHECK_THROWS_AS(clausen_via_1d_integral(kSpec, {1.2, 0}, r60), DomainError);
  }
}

TEST_CASE("appell F2 integral") {
  AppellF2Spec f2({0.5, 0}, {0.3, 0}, {0.7, 0}, {1.2, 0}, {1.8, 0});
  QuadratureRule r80 = build_rule(RuleKind::GaussLegendre, 80);
  SUBCASE("normalization at the origin") {
    Complex q = appell_f2_via_integral(f2, {0, 0}, {0, 0}, r80);
    CHECK(std::abs(q.real() - 1.0) < 1e-10);
  }
  SUBCASE("series comparison") {
    SeriesResult s =
        eval_appell_f2(f2, {0.2, 0}, {0.3, 0}, 1e-13, F2Strategy::Diagonal);
    Complex q = appell_f2_via_integral(f2, {0.2, 0}, {0.3, 0}, r80);
    CHECK(relerr(q, s.value) < 1e-7);
  }
  SUBCASE("axis collapse to the Euler integral of a Gauss function") {
    Complex q = appell_f2_via_integral(f2, {0.35, 0}, {0, 0}, r80);
    Complex w = eval_2f1({0.5, 0}, {0.3, 0}, {1.2, 0}, {0.35, 0});
    CHECK(relerr(q, w) < 1e-9);
  }
  SUBCASE("folded and naive rules agree when the powers are tame") {
    AppellF2Spec tame({0.5, 0}, {2.0, 0}, {2.5, 0}, {4.0, 0}, {5.0, 0});
    Complex folded = appell_f2_via_integral(tame, {0.2, 0}, {0.3, 0}, r80);
    Complex naive = appell_f2_via_integral_naive(tame, {0.2, 0}, {0.3, 0}, r80);
    CHECK(relerr(folded, naive) < 1e-6);
  }
  SUBCASE("parameter gate") {
    AppellF2Spec bad({0.5, 0}, {1.3, 0}, {0.7, 0}, {1.2, 0}, {1.8, 0});
    CHECK_THROWS_AS(appell_f2_via_integral(bad, {0.2, 0}, {0.3, 0}, r80),
                    DomainError);
  }
}

TEST_CASE("rule refinement stability") {
  QuadratureRule r60 = build_rule(RuleKind::GaussLaguerre, 60);
  QuadratureRule r80 = build_rule(RuleKind::GaussLaguerre, 80);
  for (double x : {0.4, -0.5, -2.0}) {
    Complex a = clausen_via_1d_integral(kSpec, {x, 0}, r60);
    Complex b = clausen_via_1d_integral(kSpec, {x, 0}, r80);
    CHECK(relerr(a, b) < 1e-8);
  }
}
