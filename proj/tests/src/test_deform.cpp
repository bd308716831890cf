#include "doctest.h"
#include "xideform/deform.hpp"

#include <cmath>

using namespace xideform;

namespace {
const PrecisionConfig kPrec{};
}

TEST_SUITE("deform") {

TEST_CASE("t gate: strict cap for maps, loose cap for the series") {
  CHECK_THROWS_AS(check_deform_t(0), DomainError);
  CHECK_THROWS_AS(check_deform_t(0.5), DomainError);
  CHECK_THROWS_AS(check_deform_t(-5), DomainError);
  CHECK_NOTHROW(check_deform_t(-5, kSeriesTCap));
  CHECK_THROWS_AS(check_deform_t(-100, kSeriesTCap), DomainError);
  LFunctionSpec zeta = preset_zeta();
  // the series converges fine at t = -30; the map machinery refuses it
  CHECK_NOTHROW(f_t_eval(zeta, -30, CxR{Real(2)}, kPrec));
  CHECK_THROWS_AS(j_map(zeta, -30, CxR{Real(2)}), DomainError);
  CHECK_THROWS_AS(log_gamma_t(zeta, -30, CxR{Real(2), Real(20)}),
                  DomainError);
}

TEST_CASE("coordinate map at the calibration point") {
  // for zeta at t = -1, J(s) - s = 1/4 exactly when s = 2 pi e
  LFunctionSpec zeta = preset_zeta();
  Real s = 2 * const_pi<Real>() * exp(Real(1));
  CxR j = j_map(zeta, -1, CxR{s});
  CHECK(static_cast<double>(abs(j.re - s - Real("0.25"))) < 1e-40);
  CHECK(static_cast<double>(abs(j.im)) < 1e-40);
  CHECK_THROWS_AS(j_map(zeta, -1, CxR{}), DomainError);
  CHECK_THROWS_AS(j_map(zeta, -1, CxR{Real(-5), Real("1e-6")}), DomainError);
}

TEST_CASE("deformed series against a direct double sum") {
  LFunctionSpec zeta = preset_zeta();
  auto v = f_t_eval(zeta, -0.5, CxR{Real(2)}, kPrec);
  double direct = 0;
  for (long n = 30000; n >= 1; --n) {
    double ln = std::log(static_cast<double>(n));
    direct += std::exp(-0.125 * ln * ln) / (static_cast<double>(n) * n);
  }
  CHECK(static_cast<double>(v.value.re) == doctest::Approx(direct).epsilon(1e-9));
  CHECK(static_cast<double>(abs(v.value.im)) < 1e-30);
  CHECK(static_cast<double>(v.err) < 1e-11);
}

TEST_CASE("majorant series at negative abscissa") {
  LFunctionSpec zeta = preset_zeta();
  auto v = f_t_tilde(zeta, -1, Real("-0.3"), kPrec);
  CHECK(static_cast<double>(v.value.re) ==
        doctest::Approx(19.054368848557016).epsilon(1e-10));
  // more weight decay means a smaller majorant
  auto w = f_t_tilde(zeta, -2, Real("-0.3"), kPrec);
  CHECK(w.value.re < v.value.re);
}

TEST_CASE("truncation lengths respond to t and the target") {
  LFunctionSpec zeta = preset_zeta();
  long a = f_t_terms(zeta, -1, -0.3, -10, 2000000);
  long b = f_t_terms(zeta, -2, -0.3, -10, 2000000);
  long c = f_t_terms(zeta, -1, -0.3, -14, 2000000);
  CHECK(a > b);
  CHECK(c > a);
  CHECK_THROWS_AS(f_t_terms(zeta, -0.01, -2.0, -30, 1000), PrecisionError);
}

TEST_CASE("gamma decay fit is sandwiched") {
  auto fit = gamma_decay_fit(preset_zeta(), 2.0, {10.0, 20.0}, 6);
  CHECK(fit.k_fit == doctest::Approx(0.61517029189468853).epsilon(1e-12));
  CHECK(fit.k_prime_fit > 0);
  CHECK(fit.max_violation == 0.0);
}

TEST_CASE("gamma_t matches its log") {
  LFunctionSpec chi4 = preset_chi4();
  CxR s{Real("0.4"), Real(18)};
  CxR lg = log_gamma_t(chi4, -1, s);
  auto g = gamma_t(chi4, -1, s, kPrec);
  CHECK(static_cast<double>(abs(g.value - exp(lg))) <
        static_cast<double>(g.err) + 1e-30);
}

}
