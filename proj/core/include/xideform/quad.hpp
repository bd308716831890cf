#pragma once

#include "xideform/cxmath.hpp"

#include <vector>

namespace xideform {

// Gauss-Legendre nodes/weights on [-1, 1], computed once at full working
// precision by Newton iteration on P_n.
struct GLRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

const GLRule& gauss_legendre(int n);

struct GLRuleD {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GLRuleD& gauss_legendre_d(int n);

// Integrates f over [a, b] with one n-point panel.
template <class F, class T>
auto gl_panel(const F& f, const T& a, const T& b, int n)
    -> decltype(f(a) * a) {
  decltype(f(a) * a) acc{};
  T half = (b - a) / T(2);
  T mid = (a + b) / T(2);
  if constexpr (std::is_same_v<T, double>) {
    const GLRuleD& r = gauss_legendre_d(n);
    for (int i = 0; i < n; ++i)
      acc += f(mid + half * r.nodes[i]) * (half * r.weights[i]);
  } else {
    const GLRule& r = gauss_legendre(n);
    for (int i = 0; i < n; ++i)
      acc += f(mid + half * T(r.nodes[i])) * (half * T(r.weights[i]));
  }
  return acc;
}

}  // namespace xideform
