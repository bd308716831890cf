#include "doctest.h"
#include "xideform/gammafn.hpp"

using namespace xideform;

namespace {
double dist(const CxR& a, const CxR& b) {
  return static_cast<double>(abs(a - b));
}
}  // namespace

TEST_SUITE("gammafn") {

TEST_CASE("values at classic points") {
  CHECK(dist(gamma_fn(CxR{Real(5)}), CxR{Real(24)}) < 1e-42);
  CHECK(dist(log_gamma(CxR{Real("0.5")}),
             CxR{log(sqrt(const_pi<Real>()))}) < 1e-45);
}

TEST_CASE("recurrence high in the strip") {
  CxR s{Real(2), Real(30)};
  CxR ratio = gamma_fn(s + Real(1)) / (gamma_fn(s) * s);
  CHECK(dist(ratio, CxR{Real(1)}) < 1e-40);
}

TEST_CASE("reflection formula") {
  CxR s{Real("0.3"), Real("0.4")};
  CxR lhs = gamma_fn(s) * gamma_fn(Real(1) - s);
  CxR rhs = const_pi<Real>() / sin_cx(const_pi<Real>() * s);
  CHECK(dist(lhs, rhs) < 1e-42);
}

TEST_CASE("conjugate symmetry and pole refusal") {
  CxR s{Real("1.7"), Real("8.25")};
  CHECK(dist(log_gamma(conj(s)), conj(log_gamma(s))) == 0);
  CHECK_THROWS_AS(log_gamma(CxR{Real(-3)}), PoleError);
  CHECK_THROWS_AS(log_gamma(CxR{Real(0)}), PoleError);
}

TEST_CASE("even bernoulli numbers") {
  const auto& b = bernoulli_even(4);
  REQUIRE(b.size() >= 4);
  CHECK(static_cast<double>(abs(b[0] - Real(1) / 6)) < 1e-48);
  CHECK(static_cast<double>(abs(b[1] + Real(1) / 30)) < 1e-48);
  CHECK(static_cast<double>(abs(b[2] - Real(1) / 42)) < 1e-48);
}

}
