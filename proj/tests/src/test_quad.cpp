#include "doctest.h"
#include "xideform/quad.hpp"

#include <cmath>

using namespace xideform;

TEST_SUITE("quad") {

TEST_CASE("gauss-legendre is exact on degree 2n-1") {
  for (int n : {4, 8, 16}) {
    const GLRule& r = gauss_legendre(n);
    REQUIRE(static_cast<int>(r.nodes.size()) == n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      Real acc = 0;
      for (int i = 0; i < n; ++i) acc += r.weights[i] * pow(r.nodes[i], k);
      Real exact = (k % 2 == 0) ? Real(2) / Real(k + 1) : Real(0);
      CHECK(static_cast<double>(abs(acc - exact)) < 1e-40);
    }
  }
}

TEST_CASE("double rule mirrors the multiprecision rule") {
  const GLRule& r = gauss_legendre(12);
  const GLRuleD& rd = gauss_legendre_d(12);
  for (int i = 0; i < 12; ++i) {
    CHECK(rd.nodes[i] == doctest::Approx(static_cast<double>(r.nodes[i])));
    CHECK(rd.weights[i] ==
          doctest::Approx(static_cast<double>(r.weights[i])));
  }
}

TEST_CASE("gl_panel integrates exp over [0,1]") {
  Real v = gl_panel([](const Real& x) { return exp(x); }, Real(0), Real(1), 24);
  CHECK(static_cast<double>(abs(v - (exp(Real(1)) - 1))) < 1e-40);
  double vd =
      gl_panel([](double x) { return std::exp(x); }, 0.0, 1.0, 24);
  CHECK(vd == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-14));
}

}
