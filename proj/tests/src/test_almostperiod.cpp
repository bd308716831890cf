#include "doctest.h"
#include "xideform/almostperiod.hpp"

using namespace xideform;

namespace {
const PrecisionConfig kPrec{};
}

TEST_SUITE("almostperiod") {

TEST_CASE("single-coefficient series: every shift qualifies") {
  // F_t is the constant 1, so the first grid tau comes back with sup 0
  LFunctionSpec one;
  one.name = "unit";
  one.coeffs.variant = CoeffVariant::ExplicitList;
  one.coeffs.values = {CxR{Real(1)}};
  validate_spec(one);
  Rect strip{-0.3, -0.2, 0, 2};
  auto shifts = find_shifts(one, -1, strip, 0.1, 10, 1, kPrec);
  REQUIRE(shifts.size() == 1);
  CHECK(shifts[0].tau == doctest::Approx(0.01));
  CHECK(shifts[0].sup_sampled == 0.0);
  CHECK(shifts[0].epsilon == doctest::Approx(0.1));
}

TEST_CASE("found shifts verify on a finer grid") {
  // away from the real axis, where the series is tame enough for eps = 0.2
  LFunctionSpec zeta = preset_zeta();
  Rect strip{-0.3, -0.2, 10, 12};
  double eps = 0.2;
  auto shifts = find_shifts(zeta, -1, strip, eps, 50, 1, kPrec);
  REQUIRE(shifts.size() == 1);
  CHECK(shifts[0].tau > 0);
  CHECK(shifts[0].sup_sampled < eps);
  double finer = verify_shift(zeta, -1, strip, shifts[0].tau, eps, 2, kPrec);
  CHECK(finer < eps);
}

TEST_CASE("a generic shift fails verification") {
  LFunctionSpec zeta = preset_zeta();
  Rect strip{-0.3, -0.2, 0, 2};
  double sup = verify_shift(zeta, -1, strip, 5.0, 0.2, 1, kPrec);
  CHECK(sup > 0.2);
}

TEST_CASE("impossible tolerance reports the best sup seen") {
  LFunctionSpec zeta = preset_zeta();
  Rect strip{-0.3, -0.2, 0, 2};
  CHECK_THROWS_AS(find_shifts(zeta, -1, strip, 1e-12, 0.5, 1, kPrec),
                  NoShiftFoundError);
}

}
