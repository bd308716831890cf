#include "doctest.h"
#include "xideform/selberg.hpp"

using namespace xideform;

namespace {
double dist(const CxR& a, const CxR& b) {
  return static_cast<double>(abs(a - b));
}
const PrecisionConfig kPrec{};
}  // namespace

TEST_SUITE("selberg") {

TEST_CASE("preset coefficients") {
  LFunctionSpec zeta = preset_zeta();
  LFunctionSpec chi4 = preset_chi4();
  validate_spec(zeta);
  validate_spec(chi4);
  for (long n = 1; n <= 12; ++n) CHECK(coeff(zeta, n) == CxR{Real(1)});
  // chi4 is the period-4 pattern 1, 0, -1, 0
  CHECK(coeff(chi4, 1) == CxR{Real(1)});
  CHECK(coeff(chi4, 2) == CxR{});
  CHECK(coeff(chi4, 3) == CxR{Real(-1)});
  CHECK(coeff(chi4, 4) == CxR{});
  CHECK(coeff(chi4, 7) == CxR{Real(-1)});
  CHECK(coeff_d(chi4, 3).re == -1.0);
}

TEST_CASE("series values at closed-form points") {
  LFunctionSpec zeta = preset_zeta();
  LFunctionSpec chi4 = preset_chi4();
  Real pi = const_pi<Real>();
  auto z2 = f_eval(zeta, CxR{Real(2)}, kPrec);
  CHECK(dist(z2.value, CxR{pi * pi / 6}) < 1e-30);
  CHECK(static_cast<double>(z2.err) < 1e-12);
  CHECK(dist(f_eval(chi4, CxR{Real(1)}, kPrec).value, CxR{pi / 4}) < 1e-30);
  // Catalan's constant
  CHECK(static_cast<double>(
            abs(f_eval(chi4, CxR{Real(2)}, kPrec).value.re -
                Real("0.915965594177219015054603514932"))) < 1e-28);
}

TEST_CASE("completed function at special points") {
  LFunctionSpec zeta = preset_zeta();
  Real pi = const_pi<Real>();
  CHECK(dist(xi_F_eval(zeta, CxR{Real(2)}, kPrec).value, CxR{pi / 6}) < 1e-28);
  CHECK(dist(xi_F_eval(zeta, CxR{Real(0)}, kPrec).value, CxR{Real("0.5")}) <
        1e-28);
  CHECK(dist(xi_F_eval(zeta, CxR{Real(1)}, kPrec).value, CxR{Real("0.5")}) <
        1e-28);
}

TEST_CASE("functional equation residual is at noise level") {
  CHECK(static_cast<double>(functional_eq_residual(
            preset_zeta(), CxR{Real("0.3"), Real(2)}, kPrec)) < 1e-35);
  CHECK(static_cast<double>(functional_eq_residual(
            preset_chi4(), CxR{Real("0.7"), Real(3)}, kPrec)) < 1e-35);
}

TEST_CASE("json round trip and hashing") {
  LFunctionSpec chi4 = preset_chi4();
  std::string text = spec_to_json_text(chi4);
  LFunctionSpec back = spec_from_json_text(text);
  CHECK(back.name == chi4.name);
  CHECK(back.coeffs.period == chi4.coeffs.period);
  CHECK(spec_hash(back) == spec_hash(chi4));
  CHECK(spec_hash(preset_zeta()) != spec_hash(chi4));
  CHECK(spec_hash(preset_zeta()) == spec_hash(preset_zeta()));
  LFunctionSpec named = spec_from_name_or_file("chi4");
  CHECK(spec_hash(named) == spec_hash(chi4));
}

TEST_CASE("validation rejects broken specs") {
  LFunctionSpec bad = preset_zeta();
  bad.gamma.bigQ = 0;
  CHECK_THROWS_AS(validate_spec(bad), DomainError);

  bad = preset_chi4();
  bad.coeffs.period = 3;  // values.size() stays 4
  CHECK_THROWS_AS(validate_spec(bad), DomainError);

  bad = preset_zeta();
  bad.gamma.factors[0].omega = Real(-1);
  CHECK_THROWS_AS(validate_spec(bad), DomainError);

  bad = preset_zeta();
  bad.coeffs.variant = CoeffVariant::ExplicitList;
  CHECK_THROWS_AS(validate_spec(bad), DomainError);
}

}
