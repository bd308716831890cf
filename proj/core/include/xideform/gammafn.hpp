#pragma once

#include "xideform/cxmath.hpp"
#include "xideform/errors.hpp"

#include <vector>

namespace xideform {

// B_2, B_4, ..., B_{2n} via the tangent-number recurrence (integer-only
// intermediate values, so no cancellation).
const std::vector<Real>& bernoulli_even(int count);

// Coefficients B_{2k} / (2k (2k-1)) of the Stirling series for log Gamma.
const std::vector<Real>& stirling_coeffs();
const std::vector<double>& stirling_coeffs_d();

namespace detail {

template <class T>
const std::vector<T>& stirling_coeffs_t() {
  if constexpr (std::is_same_v<T, double>) return stirling_coeffs_d();
  else return stirling_coeffs();
}

// Stirling series without argument shifting. Accurate once Re z is a couple
// dozen; the public log_gamma shifts into that range first.
template <class T>
Cx<T> log_gamma_stirling(const Cx<T>& z) {
  using std::log;
  const T half_log_2pi = T(0.5) * log(T(2) * const_pi<T>());
  Cx<T> lz = xideform::log(z);
  Cx<T> acc = (z - T(0.5)) * lz - z + half_log_2pi;
  const std::vector<T>& c = stirling_coeffs_t<T>();
  Cx<T> zinv = T(1) / z;
  Cx<T> zinv2 = zinv * zinv;
  Cx<T> p = zinv;
  T last = T(0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    Cx<T> term = p * c[k];
    T mag = norm(term);
    if (k > 0 && mag > last) break;  // asymptotic series turned around
    acc += term;
    last = mag;
    p = p * zinv2;
  }
  return acc;
}

template <class T> constexpr double stirling_threshold() {
  return std::is_same_v<T, double> ? 14.0 : 24.0;
}

}  // namespace detail

// Principal log Gamma: continuous on the plane cut along the negative real
// axis, real on the positive reals. Poles raise PoleError.
template <class T>
Cx<T> log_gamma(Cx<T> z) {
  using std::floor;
  using std::fabs;
  if (z.im < T(0)) return conj(log_gamma(conj(z)));
  const double thresh = detail::stirling_threshold<T>();
  if (z.im == T(0) && z.re <= T(0) && z.re == floor(z.re))
    throw PoleError("log_gamma at a nonpositive integer");
  // Gamma(z) = Gamma(z + n) / (z (z+1) ... (z+n-1)); one log of the running
  // product is much cheaper than a log per step. The product's argument
  // winds by less than pi here (0 <= arg of every factor < pi and the log is
  // taken of the product of at most a bounded-argument chain), so track the
  // winding explicitly against the factor-argument sum.
  // The winding only matters modulo 2 pi recovery, so accumulating the
  // factor arguments at double precision is plenty (error ~1e-15 per step
  // against a pi-sized decision margin).
  Cx<T> prod{T(1), T(0)};
  double arg_sum = 0;
  int steps = 0;
  while (static_cast<double>(z.re) < thresh) {
    if (z.im == T(0) && z.re <= T(0) && z.re == floor(z.re))
      throw PoleError("log_gamma at a nonpositive integer");
    prod *= z;
    arg_sum +=
        std::atan2(static_cast<double>(z.im), static_cast<double>(z.re));
    z.re += T(1);
    if (++steps > 100000) throw PrecisionError("log_gamma shift runaway");
  }
  Cx<T> shift{};
  if (steps > 0) {
    shift = xideform::log(prod);
    // Restore the total winding lost to the principal branch of the log.
    const T two_pi = T(2) * const_pi<T>();
    using std::round;
    shift.im += two_pi * T(std::round((arg_sum - static_cast<double>(shift.im)) /
                                      (2 * 3.14159265358979323846)));
  }
  return detail::log_gamma_stirling(z) - shift;
}

template <class T>
Cx<T> gamma_fn(const Cx<T>& z) {
  return exp(log_gamma(z));
}

}  // namespace xideform
