#include "xideform/quad.hpp"

#include <map>
#include <mutex>

namespace xideform {

namespace {

GLRule compute_gl(int n) {
  GLRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const Real pi = const_pi<Real>();
  for (int i = 0; i < n; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = Real(n) * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (fabs(dx) < Real("1e-48")) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

std::mutex g_mutex;

}  // namespace

const GLRule& gauss_legendre(int n) {
  static std::map<int, GLRule> cache;
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

const GLRuleD& gauss_legendre_d(int n) {
  static std::map<int, GLRuleD> cache;
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const GLRule src = compute_gl(n);
    GLRuleD d;
    d.nodes.reserve(n);
    d.weights.reserve(n);
    for (int i = 0; i < n; ++i) {
      d.nodes.push_back(static_cast<double>(src.nodes[i]));
      d.weights.push_back(static_cast<double>(src.weights[i]));
    }
    it = cache.emplace(n, std::move(d)).first;
  }
  return it->second;
}

}  // namespace xideform
