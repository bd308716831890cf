#include "doctest.h"
#include "xideform/mellin.hpp"

using namespace xideform;

namespace {
const PrecisionConfig kPrec{};
}

TEST_SUITE("mellin") {

TEST_CASE("heat-kernel transform at the origin") {
  auto v = phi_zeta(Real(0), kPrec);
  CHECK(static_cast<double>(
            abs(v.value.re -
                Real("1.78678760186849377634793866822"))) < 1e-27);
  CHECK(static_cast<double>(v.err) < 1e-12);
}

TEST_CASE("generic kernel route matches the zeta closed form") {
  LFunctionSpec zeta = preset_zeta();
  for (double u : {-0.4, 0.0, 0.3, 1.0}) {
    auto a = phi_zeta(Real(u), kPrec);
    auto b = phi_F(zeta, Real(u), kPrec);
    CHECK(static_cast<double>(abs(a.value - b.value)) <
          static_cast<double>(a.err + b.err) + 1e-25);
  }
}

TEST_CASE("evenness of the zeta kernel") {
  auto p = phi_zeta(Real("0.35"), kPrec);
  auto m = phi_zeta(Real("-0.35"), kPrec);
  CHECK(static_cast<double>(abs(p.value - m.value)) <
        static_cast<double>(p.err + m.err) + 1e-16);
}

TEST_CASE("closed-form summand values") {
  MellinKernel kz = kernel_from_gamma(preset_zeta().gamma);
  MellinKernel kc = kernel_from_gamma(preset_chi4().gamma);
  CHECK(kz.mode == MellinKernel::Mode::ClosedForm);
  CHECK(kc.mode == MellinKernel::Mode::ClosedForm);
  CHECK(static_cast<double>(
            abs(psi_closed(kz, Real(2)).re - Real(80) * exp(Real(-4)))) <
        1e-40);
  CHECK(static_cast<double>(
            abs(psi_closed(kc, Real("1.5")).re -
                Real(3) * exp(Real("-2.25")))) < 1e-40);
}

TEST_CASE("quadrature summand agrees with the closed form") {
  MellinKernel kz = kernel_from_gamma(preset_zeta().gamma);
  for (double v : {0.7, 1.0, 2.0, 5.0}) {
    CxR closed = psi_closed(kz, Real(v));
    auto quad = psi_quad(kz, Real(v), kPrec);
    CHECK(static_cast<double>(abs(closed - quad.value)) <
          static_cast<double>(quad.err) + 1e-20);
    CHECK(psi_bound(kz, Real(v)) >= abs(closed));
  }
}

}
