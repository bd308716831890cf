#pragma once

// Hurwitz zeta by Euler-Maclaurin summation, the continuation backbone for
// the ZetaLike and DirichletLLike series families.

#include "xideform/cxmath.hpp"
#include "xideform/errors.hpp"
#include "xideform/gammafn.hpp"

#include <algorithm>

namespace xideform {

namespace detail {

template <class T>
struct EMParts {
  Cx<T> regular;    // everything except the pole term
  Cx<T> n_pow_1ms;  // N^{1-s}; the pole term is this / (s-1)
  T big_n;          // N = a + M, the Euler-Maclaurin cutoff
  T err;
};

// Euler-Maclaurin pieces of zeta(s, a), split so callers can group the
// simple pole at s = 1 against other factors.
template <class T>
EMParts<T> hurwitz_em_parts(const Cx<T>& s, const T& a, int digits,
                            long max_terms) {
  using std::log;
  using std::ceil;
  using std::pow;
  if (!(a > T(0))) throw DomainError("hurwitz zeta needs a > 0");
  long m = static_cast<long>(ceil(static_cast<double>(abs(s)))) +
           static_cast<long>(1.5 * digits) + 8;
  if (m > max_terms) throw PrecisionError("hurwitz zeta term budget exceeded");

  Cx<T> sum{};
  for (long k = 0; k < m; ++k) sum += exp(-s * log(Cx<T>(a + T(k))));

  T n = a + T(m);
  T logn = log(n);
  Cx<T> n_pow_ms = exp(-s * logn);  // N^{-s}
  Cx<T> acc = sum + n_pow_ms * T(0.5);

  // Correction terms, adaptive depth with the first omitted term as the
  // error estimate.
  const std::vector<Real>& b2 = bernoulli_even(30);
  Cx<T> poch = s;                       // (s)(s+1)...(s+2j-2)
  Cx<T> npow = n_pow_ms / n;            // N^{-s-2j+1}
  T n2 = n * n;
  T fact = T(2);                        // (2j)!
  T last_mag = T(0);
  T err = T(0);
  bool settled = false;
  const T tiny = pow(T(10), T(-(digits + 4)));
  for (int j = 1; j <= 30; ++j) {
    Cx<T> term = poch * npow * (T(b2[j - 1]) / fact);
    T mag = abs(term);
    if (j > 1 && mag > last_mag) { err = last_mag; settled = true; break; }
    acc += term;
    last_mag = mag;
    if (mag < tiny * (abs(acc) + T(1))) { err = mag; settled = true; break; }
    poch = poch * (s + T(2 * j - 1)) * (s + T(2 * j));
    npow = npow / n2;
    fact *= T((2 * j + 1) * (2 * j + 2));
  }
  if (!settled) err = last_mag;
  return {acc, n_pow_ms * n, n, err};
}

}  // namespace detail

template <class T>
Cx<T> hurwitz_zeta(const Cx<T>& s, const T& a, int digits, long max_terms,
                   T* err_out = nullptr) {
  if (s == Cx<T>(T(1))) throw PoleError("hurwitz zeta pole at s = 1");
  auto p = detail::hurwitz_em_parts(s, a, digits, max_terms);
  Cx<T> one{T(1)};
  Cx<T> v = p.regular + p.n_pow_1ms / (s - one);
  if (err_out) *err_out = p.err;
  return v;
}

// (s - 1) * zeta(s, a): entire in s, stable at and near the pole.
template <class T>
Cx<T> hurwitz_zeta_pole_sep(const Cx<T>& s, const T& a, int digits,
                            long max_terms, T* err_out = nullptr) {
  auto p = detail::hurwitz_em_parts(s, a, digits, max_terms);
  Cx<T> one{T(1)};
  Cx<T> v = p.regular * (s - one) + p.n_pow_1ms;
  if (err_out) *err_out = p.err * (abs(s - one) + T(1));
  return v;
}

template <class T>
Cx<T> riemann_zeta(const Cx<T>& s, int digits, long max_terms,
                   T* err_out = nullptr) {
  return hurwitz_zeta(s, T(1), digits, max_terms, err_out);
}

}  // namespace xideform
