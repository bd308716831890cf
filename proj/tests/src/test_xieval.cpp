#include "doctest.h"
#include "xideform/xieval.hpp"

using namespace xideform;

namespace {
const PrecisionConfig kPrec{};
}

TEST_SUITE("xieval") {

TEST_CASE("fourier and contour routes agree off the line") {
  LFunctionSpec zeta = preset_zeta();
  CxR s{Real("0.3"), Real(15)};
  auto a = xi_t_fourier(zeta, -1, s, kPrec);
  auto b = xi_t_contour(zeta, -1, s, kPrec);
  double gap = static_cast<double>(abs(a.value - b.value));
  CHECK(gap <= static_cast<double>(a.err + b.err));
  CHECK(gap / static_cast<double>(abs(a.value)) < 1e-10);
  // the dispatcher returns one of the two
  auto c = xi_t_eval(zeta, -1, s, kPrec);
  CHECK(static_cast<double>(abs(c.value - a.value)) <=
        static_cast<double>(c.err + a.err));
}

TEST_CASE("real on the critical line, positive at the center") {
  LFunctionSpec zeta = preset_zeta();
  auto v = xi_t_eval(zeta, -1, CxR{Real("0.5"), Real(12)}, kPrec);
  CHECK(static_cast<double>(abs(v.value.im)) /
            static_cast<double>(abs(v.value)) < 1e-12);
  auto c = xi_t_eval(zeta, -0.5, CxR{Real("0.5")}, kPrec);
  CHECK(c.value.re > 0);
  CHECK(static_cast<double>(abs(c.value.im)) <
        static_cast<double>(c.err) + 1e-25);
}

TEST_CASE("deformation symmetry about the critical line") {
  LFunctionSpec chi4 = preset_chi4();
  CxR s{Real("0.35"), Real(14)};
  auto a = xi_t_eval(chi4, -1, s, kPrec);
  auto b = xi_t_eval(chi4, -1, CxR{Real(1) - s.re, s.im}, kPrec);
  CHECK(static_cast<double>(abs(a.value - conj(b.value))) <=
        static_cast<double>(a.err + b.err) * 10);
}

TEST_CASE("series coefficient images shrink with height") {
  // b_{t,n} should approach gamma_t * e^{-t-weight} n^{-s} as Im s grows
  LFunctionSpec zeta = preset_zeta();
  double t = -1;
  for (long n : {2L, 3L}) {
    Real lg = log(Real(n));
    Real w = exp(-lg * lg / 4);
    double rel_lo, rel_hi;
    for (double y : {30.0, 60.0}) {
      CxR s{Real("0.4"), Real(y)};
      auto b = b_tn(zeta, t, n, s, kPrec);
      auto g = gamma_t(zeta, t, s, kPrec);
      CxR model = g.value * w * pow(CxR{Real(n)}, -s);
      double rel = static_cast<double>(abs(b.value - model) / abs(model));
      (y < 45 ? rel_lo : rel_hi) = rel;
    }
    CHECK(rel_hi < rel_lo);
    CHECK(rel_hi < 0.05);
  }
}

TEST_CASE("approximation residual is small at usable heights") {
  LFunctionSpec zeta = preset_zeta();
  Real r = deformed_series_residual(zeta, -1, CxR{Real("-0.25"), Real(30)},
                                    kPrec);
  CHECK(static_cast<double>(r) < 0.2);
}

TEST_CASE("refusals") {
  LFunctionSpec zeta = preset_zeta();
  CHECK_THROWS_AS(xi_t_eval(zeta, 1, CxR{Real("0.5"), Real(12)}, kPrec),
                  DomainError);
  CHECK_THROWS_AS(xi_t_eval(zeta, -9, CxR{Real("0.5"), Real(12)}, kPrec),
                  DomainError);
}

}
