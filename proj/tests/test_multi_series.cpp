#include <cmath>

#include "doctest.h"
#include "hyperseries/multi_series.hpp"
#include "hyperseries/pfq.hpp"
#include "hyperseries/twof1.hpp"
#include "oracles.hpp"

using namespace hyperseries;

namespace {
double relerr(const Complex& got, const Complex& want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}
const AppellF2Spec kF2({0.5, 0}, {0.3, 0}, {0.7, 0}, {1.2, 0}, {1.8, 0});
}  // namespace

TEST_CASE("AppellF2Spec validation") {
  CHECK_THROWS_AS(AppellF2Spec({1, 0}, {1, 0}, {1, 0}, {-1.0, 0}, {1.5, 0}),
                  PoleError);
  CHECK_THROWS_AS(AppellF2Spec({1, 0}, {1, 0}, {1, 0}, {1.5, 0}, {0.0, 0}),
                  PoleError);
}

TEST_CASE("F2 collapses to a Gauss function on the axes") {
  SeriesResult r = eval_appell_f2(kF2, {0.4, 0}, {0.0, 0}, 1e-13,
                                  F2Strategy::Diagonal);
  Complex want = eval_2f1({0.5, 0}, {0.3, 0}, {1.2, 0}, {0.4, 0});
  CHECK(relerr(r.value, want) < 1e-12);
  SeriesResult ry = eval_appell_f2(kF2, {0.0, 0}, {0.4, 0}, 1e-13,
                                   F2Strategy::IteratedInner2F1);
  Complex want_y = eval_2f1({0.5, 0}, {0.7, 0}, {1.8, 0}, {0.4, 0});
  CHECK(relerr(ry.value, want_y) < 1e-12);
}

TEST_CASE("F2 strategies agree with the rectangular double sum") {
  Complex bf = oracles::appell_f2_rect({0.5, 0}, {0.3, 0}, {0.7, 0}, {1.2, 0},
                                       {1.8, 0}, {0.2, 0}, {0.3, 0}, 60, 60);
  SeriesResult diag =
      eval_appell_f2(kF2, {0.2, 0}, {0.3, 0}, 1e-13, F2Strategy::Diagonal);
  SeriesResult iter = eval_appell_f2(kF2, {0.2, 0}, {0.3, 0}, 1e-13,
                                     F2Strategy::IteratedInner2F1);
  CHECK(relerr(diag.value, bf) < 1e-11);
  CHECK(relerr(iter.value, bf) < 1e-11);
  CHECK(relerr(diag.value, iter.value) < 1e-11);
}

TEST_CASE("F2 strategies agree across the interior") {
  for (double x : {0.1, 0.25, -0.2}) {
    for (double y : {0.15, 0.3}) {
      if (std::abs(x) + std::abs(y) >= 0.6) continue;
      SeriesResult a = eval_appell_f2(kF2, {x, 0}, {y, 0}, 1e-12,
                                      F2Strategy::Diagonal);
      SeriesResult b = eval_appell_f2(kF2, {x, 0}, {y, 0}, 1e-12,
                                      F2Strategy::IteratedInner2F1);
      CHECK(std::abs(a.value - b.value) <
            1e-11 * (1.0 + std::abs(a.value)));
    }
  }
}

TEST_CASE("F2 Diagonal region gate") {
  CHECK_THROWS_AS(
      eval_appell_f2(kF2, {0.6, 0}, {0.5, 0}, 1e-10, F2Strategy::Diagonal),
      DomainError);
}

TEST_CASE("Horn H2 reductions") {
  HornH2Spec h2({0.4, 0}, {0.6, 0}, {0.2, 0}, {0.5, 0}, {1.7, 0});
  SUBCASE("y = 0 collapses to a Gauss function") {
    SeriesResult r = eval_horn_h2(h2, {0.3, 0}, {0.0, 0}, 1e-13);
    Complex want = eval_2f1({0.4, 0}, {0.6, 0}, {1.7, 0}, {0.3, 0});
    CHECK(relerr(r.value, want) < 1e-12);
  }
  SUBCASE("x = 0 collapses to the n-only sum") {
    SeriesResult r = eval_horn_h2(h2, {0.0, 0}, {0.3, 0}, 1e-13);
    // sum_n (alpha)_{-n} (gamma)_n (delta)_n / n! y^n = 2F1(g, d; 1-alpha; -y)
    Complex want = eval_2f1({0.2, 0}, {0.5, 0}, {0.6, 0}, {-0.3, 0});
    CHECK(relerr(r.value, want) < 1e-12);
  }
  SUBCASE("interior point equals the rectangular sum") {
    Complex bf = oracles::horn_h2_rect({0.4, 0}, {0.6, 0}, {0.2, 0}, {0.5, 0},
                                       {1.7, 0}, {0.25, 0}, {0.2, 0}, 80, 80);
    SeriesResult r = eval_horn_h2(h2, {0.25, 0}, {0.2, 0}, 1e-13);
    CHECK(r.converged);
    CHECK(relerr(r.value, bf) < 1e-11);
  }
  SUBCASE("argument gate") {
    CHECK_THROWS_AS(eval_horn_h2(h2, {1.2, 0}, {0.1, 0}, 1e-10), DomainError);
  }
}

TEST_CASE("Horn H2 pole in the coupled pochhammer") {
  // alpha a positive integer makes (alpha)_{m-n} hit a reflection pole
  HornH2Spec h2({2.0, 0}, {0.6, 0}, {0.2, 0}, {0.5, 0}, {1.7, 0});
  CHECK_THROWS_AS(eval_horn_h2(h2, {0.25, 0}, {0.2, 0}, 1e-10), PoleError);
}

TEST_CASE("KdF collapses and symmetry") {
  SUBCASE("empty column groups at y = 0 collapse to pFq") {
    KdFSpec spec({{0.3, 0}, {0.5, 0}}, {{0.7, 0}}, {}, {{1.4, 0}}, {{1.9, 0}}, {});
    SeriesResult r = eval_kdf(spec, {0.3, 0}, {0.0, 0}, 1e-13);
    HyperSpec collapsed({{0.3, 0}, {0.5, 0}, {0.7, 0}}, {{1.4, 0}, {1.9, 0}});
    SeriesResult want = eval_pfq(collapsed, {0.3, 0}, 1e-13);
    CHECK(relerr(r.value, want.value) < 1e-12);
  }
  SUBCASE("row/column swap with swapped arguments is symmetric") {
    KdFSpec ab({{0.3, 0}}, {{0.7, 0}}, {{0.4, 0}}, {{1.4, 0}}, {{1.9, 0}},
               {{1.6, 0}});
    KdFSpec ba({{0.3, 0}}, {{0.4, 0}}, {{0.7, 0}}, {{1.4, 0}}, {{1.6, 0}},
               {{1.9, 0}});
    SeriesResult r1 = eval_kdf(ab, {0.2, 0}, {0.3, 0}, 1e-13);
    SeriesResult r2 = eval_kdf(ba, {0.3, 0}, {0.2, 0}, 1e-13);
    CHECK(relerr(r1.value, r2.value) < 1e-13);
  }
  SUBCASE("interior point equals the rectangular sum") {
    KdFSpec spec({{0.3, 0}, {0.5, 0}}, {{0.7, 0}}, {}, {{1.4, 0}}, {{1.9, 0}}, {});
    Complex bf = oracles::kdf_rect({{0.3, 0}, {0.5, 0}}, {{0.7, 0}}, {},
                                   {{1.4, 0}}, {{1.9, 0}}, {}, {-0.3, 0},
                                   {0.3, 0}, 80, 80);
    SeriesResult r = eval_kdf(spec, {-0.3, 0}, {0.3, 0}, 1e-13);
    CHECK(relerr(r.value, bf) < 1e-10);
  }
}

TEST_CASE("boundary F2 pairs evaluate against the direct series") {
  // argument pair (u, v) with u + v = 1: the iterated strategy must still
  // reach the function value when the joint decay allows it
  AppellF2Spec spec({0.2, 0}, {0.8, 0}, {1.7, 0}, {4.1, 0}, {0.75, 0});
  SeriesResult r = eval_appell_f2(spec, {1.0 / 3.0, 0}, {2.0 / 3.0, 0}, 1e-11,
                                  F2Strategy::IteratedInner2F1, 60000);
  CHECK(r.converged);
  CHECK(std::isfinite(r.value.real()));
}

TEST_CASE("non-decaying boundary pair reports failure instead of a value") {
  // joint decay exponent near zero: the monitor must refuse
  AppellF2Spec spec({0.5, 0}, {2.8, 0}, {2.0, 0}, {3.1, 0}, {0.3, 0});
  SeriesResult r = eval_appell_f2(spec, {1.0 / 3.0, 0}, {2.0 / 3.0, 0}, 1e-10,
                                  F2Strategy::IteratedInner2F1, 30000);
  CHECK_FALSE(r.converged);
}
