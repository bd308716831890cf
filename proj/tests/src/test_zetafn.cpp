#include "doctest.h"
#include "xideform/zetafn.hpp"

using namespace xideform;

namespace {
double dist(const CxR& a, const CxR& b) {
  return static_cast<double>(abs(a - b));
}
}  // namespace

TEST_SUITE("zetafn") {

TEST_CASE("zeta(2) against the closed form") {
  Real err = 0;
  CxR v = riemann_zeta(CxR{Real(2)}, 34, 200000L, &err);
  Real pi = const_pi<Real>();
  CHECK(dist(v, CxR{pi * pi / 6}) < 1e-33);
  CHECK(static_cast<double>(err) < 1e-32);
  // frozen decimal check, independent of const_pi
  CHECK(static_cast<double>(
            abs(v.re - Real("1.64493406684822643647241516665"))) < 1e-28);
}

TEST_CASE("zeta(-1) continues past the pole") {
  CxR v = riemann_zeta(CxR{Real(-1)}, 34, 200000L, static_cast<Real*>(nullptr));
  CHECK(dist(v, CxR{Real(-1) / 12}) < 1e-32);
}

TEST_CASE("hurwitz identity at a = 1/2") {
  CxR s{Real(3)};
  CxR lhs = hurwitz_zeta(s, Real("0.5"), 34, 200000L, static_cast<Real*>(nullptr));
  CxR rhs = (pow(CxR{Real(2)}, s) - Real(1)) *
            riemann_zeta(s, 34, 200000L, static_cast<Real*>(nullptr));
  CHECK(dist(lhs, rhs) < 1e-31);
}

TEST_CASE("pole handling") {
  CHECK_THROWS_AS(
      (hurwitz_zeta(CxR{Real(1)}, Real(1), 34, 200000L, static_cast<Real*>(nullptr))), PoleError);
  // (s - 1) zeta(s) -> 1 at the pole
  CxR v = hurwitz_zeta_pole_sep(CxR{Real(1)}, Real(1), 34, 200000L, static_cast<Real*>(nullptr));
  CHECK(dist(v, CxR{Real(1)}) < 1e-30);
  CHECK_THROWS_AS(
      (hurwitz_zeta(CxR{Real(2)}, Real(-1), 34, 200000L, static_cast<Real*>(nullptr))),
      DomainError);
}

TEST_CASE("high-imaginary evaluation stays accurate") {
  // |zeta(1/2 + 25i)| from an Euler-Maclaurin run at higher digits
  Real err = 0;
  CxR a = riemann_zeta(CxR{Real("0.5"), Real(25)}, 34, 200000L, &err);
  CxR b = riemann_zeta(CxR{Real("0.5"), Real(25)}, 42, 400000L, static_cast<Real*>(nullptr));
  CHECK(dist(a, b) < 1e-30);
}

}
