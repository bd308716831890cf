#pragma once

#include "xideform/gammafn.hpp"
#include "xideform/selberg.hpp"

namespace xideform::detail {

template <class T>
Cx<T> to_c(const CxR& z) {
  return {static_cast<T>(z.re), static_cast<T>(z.im)};
}
template <> inline Cx<Real> to_c<Real>(const CxR& z) { return z; }

// log of alpha * s^m (s-1)^m Q^s prod Gamma(omega_i s + mu_i), with optional
// regrouping near the two special points:
//   drop_s1_pow   - omit the (s-1)^m factor (caller holds it against the
//                   series pole),
//   absorb_s_pole - cancel s^m against Gamma poles at mu = 0 via
//                   Gamma(w) = Gamma(w+1)/w.
// Throws PoleError if a Gamma pole survives the regrouping.
template <class T>
Cx<T> log_gamma_factor_core(const GammaData& g, const Cx<T>& s,
                            bool drop_s1_pow = false,
                            bool absorb_s_pole = false) {
  using std::log;
  using std::floor;
  Cx<T> acc = xideform::log(to_c<T>(g.alpha));
  int m_eff = g.pole_order_m;
  int absorb_budget = absorb_s_pole ? g.pole_order_m : 0;
  acc += s * T(log(static_cast<T>(g.bigQ)));
  if (!drop_s1_pow && g.pole_order_m > 0)
    acc += xideform::log(s - T(1)) * T(g.pole_order_m);
  for (const GammaFactorTerm& f : g.factors) {
    T omega = static_cast<T>(f.omega);
    Cx<T> mu = to_c<T>(f.mu);
    Cx<T> w = s * omega + mu;
    if (absorb_budget > 0 && mu == Cx<T>{}) {
      acc += log_gamma(w + T(1)) - T(log(omega));
      --absorb_budget;
      --m_eff;
    } else {
      acc += log_gamma(w);  // PoleError at nonpositive integers
    }
  }
  if (m_eff > 0) {
    if (s == Cx<T>{}) throw PoleError("log of zero: s^m factor at s = 0");
    acc += xideform::log(s) * T(m_eff);
  }
  return acc;
}

}  // namespace xideform::detail
