#include "doctest.h"
#include "xideform/cxmath.hpp"

#include <cmath>

using namespace xideform;

namespace {
double dist(const CxR& a, const CxR& b) {
  return static_cast<double>(abs(a - b));
}
}  // namespace

TEST_SUITE("cxmath") {

TEST_CASE("division uses Smith scaling") {
  CxD q = CxD{3, 4} / CxD{1, -2};
  CHECK(q.re == doctest::Approx(-1.0));
  CHECK(q.im == doctest::Approx(2.0));
  // naive re*re+im*im would overflow here
  CxD big{1e200, 1e200};
  CxD r = big / big;
  CHECK(r.re == doctest::Approx(1.0));
  CHECK(std::fabs(r.im) < 1e-12);
}

TEST_CASE("exp/log round trip at working precision") {
  CxR z{Real("0.7"), Real("-1.9")};
  CHECK(dist(log(exp(z)), z) < 1e-45);
  CHECK(dist(exp(log(z)), z) < 1e-45);
}

TEST_CASE("sqrt takes the principal branch") {
  CxR s = sqrt(CxR{Real(-4), Real(0)});
  CHECK(dist(s, CxR{Real(0), Real(2)}) < 1e-45);
  CxR w = sqrt(CxR{Real(3), Real(-4)});
  CHECK(static_cast<double>(w.re) > 0);
  CHECK(dist(w * w, CxR{Real(3), Real(-4)}) < 1e-44);
}

TEST_CASE("pow, arg, polar") {
  // i^i = e^{-pi/2}
  CxD p = pow(CxD{0, 1}, CxD{0, 1});
  CHECK(p.re == doctest::Approx(std::exp(-std::acos(-1.0) / 2)));
  CHECK(std::fabs(p.im) < 1e-15);
  CHECK(arg(CxD{-1, 0}) == doctest::Approx(std::acos(-1.0)));
  CxD z = polar_cx(2.0, 0.5);
  CHECK(z.re == doctest::Approx(2 * std::cos(0.5)));
  CHECK(z.im == doctest::Approx(2 * std::sin(0.5)));
}

TEST_CASE("conversions preserve exact doubles") {
  CxR z{Real("1.25"), Real("-3.5")};
  CxD d = to_cxd(z);
  CHECK(d.re == 1.25);
  CHECK(d.im == -3.5);
  CHECK(to_cxr(d) == z);
}

TEST_CASE("const_pi matches double pi") {
  CHECK(static_cast<double>(const_pi<Real>()) ==
        doctest::Approx(std::acos(-1.0)));
  CHECK(const_pi<double>() == doctest::Approx(std::acos(-1.0)));
}

}
