#include "xideform/gammafn.hpp"

#include <mutex>

namespace xideform {

namespace {

std::vector<Real> compute_bernoulli_even(int count) {
  // Tangent numbers t[1..count] (Knuth-Buckholtz recurrence), then
  // B_{2n} = (-1)^{n-1} 2n t[n] / (4^n (4^n - 1)).
  std::vector<Real> t(count + 1, Real(0));
  t[1] = 1;
  for (int k = 2; k <= count; ++k) t[k] = Real(k - 1) * t[k - 1];
  for (int k = 2; k <= count; ++k)
    for (int j = k; j <= count; ++j)
      t[j] = Real(j - k) * t[j - 1] + Real(j - k + 2) * t[j];
  std::vector<Real> b(count);
  Real four_n = 1;
  for (int n = 1; n <= count; ++n) {
    four_n *= 4;
    Real v = Real(2 * n) * t[n] / (four_n * (four_n - 1));
    b[n - 1] = (n % 2 == 1) ? v : -v;
  }
  return b;
}

std::mutex g_mutex;

}  // namespace

const std::vector<Real>& bernoulli_even(int count) {
  static std::vector<Real> cache;
  std::lock_guard<std::mutex> lock(g_mutex);
  if (static_cast<int>(cache.size()) < count)
    cache = compute_bernoulli_even(count);
  return cache;
}

const std::vector<Real>& stirling_coeffs() {
  static const std::vector<Real> coeffs = [] {
    const std::vector<Real>& b = bernoulli_even(40);
    std::vector<Real> c(40);
    for (int k = 1; k <= 40; ++k)
      c[k - 1] = b[k - 1] / Real((2 * k - 1) * (2 * k));
    return c;
  }();
  return coeffs;
}

const std::vector<double>& stirling_coeffs_d() {
  static const std::vector<double> coeffs = [] {
    const std::vector<Real>& c = stirling_coeffs();
    std::vector<double> d;
    d.reserve(16);
    for (int k = 0; k < 16; ++k) d.push_back(static_cast<double>(c[k]));
    return d;
  }();
  return coeffs;
}

}  // namespace xideform
