#include "xideform/xieval.hpp"

#include "xideform/detail/gammafactor.hpp"
#include "xideform/mellin.hpp"
#include "xideform/quad.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace xideform {

namespace {

const double kLog10E = 0.4342944819032518;

// Magnitude scale of xi near s, in nats; 0 near the s(s-1) zeros where the
// completed function is O(1) anyway. Clamped so a vanishing gamma factor
// cannot drive stopping targets below anything achievable.
Real xi_scale_log(const LFunctionSpec& spec, const CxR& s, int digits) {
  if (abs(s) < Real("0.01") || abs(s - CxR{Real(1), Real(0)}) < Real("0.01"))
    return Real(0);
  Real lg = log_gamma_factor(spec, s).re;
  Real lo = Real(-(2 * digits + 20)) * log(Real(10));
  if (!(lg > lo)) return lo;
  if (lg > 0) return Real(0);
  return lg;
}

// Local phase rate of xi^F (or gamma alone) along the vertical line Re w = c,
// plus the kernel's own oscillation 2|c - x0|/|t|.
double line_phase_rate(const GammaData& g, double c, double x0, double at,
                       double tau) {
  double r = 2 * std::fabs(c - x0) / at;
  for (const GammaFactorTerm& f : g.factors) {
    double omega = static_cast<double>(f.omega);
    r += omega * std::log(omega * (std::fabs(tau) + 2) +
                          static_cast<double>(abs(f.mu)) + 2);
  }
  r += std::fabs(std::log(static_cast<double>(g.bigQ)));
  r += 2.0 * g.pole_order_m / (std::fabs(tau) + 1);
  return r + 1;  // slack for the Dirichlet factor's slow phase drift
}

struct LineResult {
  CxR value{};
  Real err = 0;
  Real peak = 0;       // max sampled |integrand|
  Real total_len = 0;  // integrated length, for the roundoff term
};

// Adaptive outward panel sweep of a vertical-line integrand from tau = y0.
// f returns (value, pointwise err bound). Stops a side once three consecutive
// panels fall below target_abs / 8, then adds a Gaussian tail bound with
// decay rate 2 * distance / at.
LineResult sweep_line(const std::function<std::pair<CxR, Real>(const Real&)>& f,
                      const GammaData& g, double c, double x0, double y0,
                      double at, const Real& target_abs, long max_panels) {
  LineResult out;
  const GLRule& r16 = gauss_legendre(16);
  const GLRule& r8 = gauss_legendre(8);
  long panels = 0;
  for (int side = 0; side < 2; ++side) {
    double tau = y0;
    int quiet = 0;
    while (true) {
      double rate = line_phase_rate(g, c, x0, at, tau);
      double width =
          std::min(0.75 * std::sqrt(at), 3.14159265358979323846 / rate);
      double lo = tau, hi = tau + (side == 0 ? width : -width);
      Real a(std::min(lo, hi)), b(std::max(lo, hi));
      Real half = (b - a) / 2, mid = (a + b) / 2;
      CxR i16{}, i8{};
      Real node_err = 0;
      for (int i = 0; i < 16; ++i) {
        auto [v, e] = f(mid + half * r16.nodes[i]);
        i16 += v * (half * r16.weights[i]);
        node_err += e * (half * r16.weights[i]);
        out.peak = std::max(out.peak, abs(v));
      }
      for (int i = 0; i < 8; ++i) {
        auto [v, e] = f(mid + half * r8.nodes[i]);
        i8 += v * (half * r8.weights[i]);
      }
      out.value += i16;
      out.err += abs(i16 - i8) + node_err;
      out.total_len += 2 * half;
      tau = (side == 0 ? hi : lo - width);
      if (abs(i16) < target_abs / 8) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      if (++panels > max_panels)
        throw PrecisionError("vertical-line panel budget exceeded");
    }
    double dist = std::max(std::fabs(tau - y0), std::sqrt(at));
    auto [v_end, e_end] = f(Real(tau));
    out.err += (abs(v_end) + e_end) * Real(at) / Real(2 * dist);
  }
  return out;
}

}  // namespace

namespace detail {

Real phi_F_envelope(const LFunctionSpec& spec, const Real& u) {
  MellinKernel kernel = kernel_from_gamma(spec.gamma);
  Real e2 = exp(2 * u);
  Real scale = 2 * abs(spec.gamma.alpha) * exp(u);
  long support = coeff_support_end(spec);
  Real acc = 0;
  int shrinking = 0;
  Real prev = -1;
  for (long n = 1;; ++n) {
    if (support > 0 && n > support) break;
    Real b = psi_bound(kernel, Real(n) * e2 / spec.gamma.bigQ) *
             coeff_envelope(spec, n);
    acc += b;
    if (prev >= 0 && b <= prev) ++shrinking;
    else shrinking = 0;
    prev = b;
    if (shrinking >= 3 && b * (n + 4) < acc * Real("1e-18") + Real("1e-80")) {
      acc += b * (n + 4);
      break;
    }
    if (n > 200000)
      throw PrecisionError("weight-envelope term budget exceeded");
  }
  return scale * acc;
}

ValueWithError xi_gauss_line(const LFunctionSpec& spec, double t,
                             const CxR& sigma, const Real& c,
                             const Real& target_abs,
                             const PrecisionConfig& prec) {
  check_deform_t(t);
  double at = std::fabs(t);
  Real at_r(at);
  double x0 = static_cast<double>(sigma.re);
  double y0 = static_cast<double>(sigma.im);
  auto f = [&](const Real& tau) -> std::pair<CxR, Real> {
    CxR w{c, tau};
    ValueWithError xi = xi_F_eval(spec, w, prec);
    CxR d = sigma - w;
    CxR k = exp(d * d / at_r);
    return {xi.value * k, xi.err * abs(k)};
  };
  LineResult lr = sweep_line(f, spec.gamma, static_cast<double>(c), x0, y0,
                             at, target_abs, 4000);
  Real norm = sqrt(const_pi<Real>() * at_r);
  Real round_err =
      lr.peak * lr.total_len * pow(Real(10), Real(-46));
  return {lr.value / norm, (lr.err + round_err) / norm};
}

}  // namespace detail

QuadraturePlan fourier_plan(const LFunctionSpec& spec, double t, const CxR& s,
                            const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  double x = static_cast<double>(s.re);
  double y = static_cast<double>(s.im);
  double gx = std::fabs(2 * x - 1);
  Real target = prec.target_abs_err *
                exp(xi_scale_log(spec, s, prec.working_digits));
  // Support cutoff: the kernel-times-weight envelope must fall well under
  // target, and keep falling (the weight decays doubly exponentially).
  double u = 0.5;
  Real env;
  while (true) {
    env = detail::phi_F_envelope(spec, Real(u)) *
          exp(Real(t) * u * u + Real(gx) * u);
    if (env < target / 100) break;
    u += 0.25;
    if (u > 8) throw PrecisionError("no support cutoff for the kernel route");
  }
  Real env_next = detail::phi_F_envelope(spec, Real(u + 0.5)) *
                  exp(Real(t) * (u + 0.5) * (u + 0.5) + Real(gx) * (u + 0.5));
  if (!(env_next < env))
    throw PrecisionError("kernel-route envelope stopped decaying");
  QuadraturePlan plan;
  plan.u_cutoff = Real(u);
  double freq = 2 * std::fabs(y) + 2 * std::fabs(t) * u + gx;
  plan.step_bound = Real(3.14159265358979323846 / 4 / freq);
  double width =
      std::min(0.35, 4 * static_cast<double>(plan.step_bound));
  long half = static_cast<long>(std::ceil(u / width));
  plan.panel_count = 2 * half;
  return plan;
}

QuadraturePlan contour_plan(const LFunctionSpec& spec, double t, const CxR& s,
                            const Real& abscissa,
                            const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  double at = std::fabs(t);
  double x0 = static_cast<double>(s.re);
  double y0 = static_cast<double>(s.im);
  double c = static_cast<double>(abscissa);
  QuadraturePlan plan;
  plan.contour_abscissa = abscissa;
  double dx = c - x0;
  double v = std::sqrt(dx * dx +
                       at * (prec.working_digits + 6) * 2.302585092994046);
  plan.half_height = Real(v);
  double rate = std::max(
      line_phase_rate(spec.gamma, c, x0, at, y0 + v),
      line_phase_rate(spec.gamma, c, x0, at, y0 - v));
  plan.step_bound = Real(3.14159265358979323846 / 4 / rate);
  double width = std::min(0.75 * std::sqrt(at),
                          3.14159265358979323846 / rate);
  plan.panel_count = 2 * static_cast<long>(std::ceil(v / width));
  return plan;
}

ValueWithError xi_t_fourier(const LFunctionSpec& spec, double t, const CxR& s,
                            const PrecisionConfig& prec) {
  QuadraturePlan plan = fourier_plan(spec, t, s, prec);
  long half = plan.panel_count / 2;
  Real u_cut = plan.u_cutoff;
  Real width = u_cut / half;
  PrecisionConfig prec_phi = prec;
  prec_phi.target_abs_err = pow(Real(10), Real(-(prec.working_digits + 4)));
  CxR two_s_1 = s * Real(2) - CxR{Real(1), Real(0)};
  Real t_r(t);
  // Folded integrand over [0, U]: the weight's reflection symmetry
  // Phi_F(-u) = conj(Phi_F(u)) comes from the class's functional equation,
  // and makes the fold exactly real on the critical line.
  Real peak = 0;
  Real err = 0;
  CxR acc{};
  auto g = [&](const Real& u) -> CxR {
    ValueWithError phi = phi_F(spec, u, prec_phi);
    CxR e1 = exp(two_s_1 * u);
    CxR e2 = exp(two_s_1 * (-u));
    Real gauss = exp(t_r * u * u);
    CxR val = (phi.value * e1 + conj(phi.value) * e2) * gauss;
    err += phi.err * gauss * (abs(e1) + abs(e2)) * width / 2;
    peak = std::max(peak, abs(val));
    return val;
  };
  for (long p = 0; p < half; ++p) {
    Real a = width * p, b = width * (p + 1);
    CxR i16 = gl_panel(g, a, b, 16);
    CxR i8 = gl_panel(g, a, b, 8);
    acc += i16;
    err += abs(i16 - i8);
  }
  double x = static_cast<double>(s.re);
  double gx = std::fabs(2 * x - 1);
  Real tail = detail::phi_F_envelope(spec, u_cut) *
              exp(t_r * u_cut * u_cut + Real(gx) * u_cut);
  err += 2 * tail;
  Real round_err = peak * u_cut * pow(Real(10), Real(-prec.working_digits));
  err += round_err;
  if (abs(acc) < 10 * round_err && !(round_err == 0))
    throw PrecisionError(
        "kernel-route cancellation exceeds the digit budget at this height");
  return {acc, err};
}

ValueWithError xi_t_contour(const LFunctionSpec& spec, double t, const CxR& s,
                            const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  double at = std::fabs(t);
  double x = static_cast<double>(s.re);
  double y = std::fabs(static_cast<double>(s.im));
  // The integrand on Re w = 2 exceeds the answer by e^{(x-2)^2/|t|} from the
  // kernel plus the gamma decay between the line and the result's height.
  GammaDecayFit fit =
      gamma_decay_fit(spec, 2.0, {10.0, std::max(20.0, y)}, 6);
  double extra =
      ((x - 2) * (x - 2) / at + fit.k_fit * y) * kLog10E;
  if (extra > prec.working_digits)
    throw PrecisionError(
        "vertical-line route would lose more digits than the working budget");
  Real target = prec.target_abs_err *
                exp(xi_scale_log(spec, s, prec.working_digits));
  return detail::xi_gauss_line(spec, t, s, Real(2), target, prec);
}

ValueWithError xi_t_eval(const LFunctionSpec& spec, double t, const CxR& s,
                         const PrecisionConfig& prec, XiRoute route) {
  if (route == XiRoute::Auto)
    route = fabs(s.re - Real("0.5")) <= Real(3) ? XiRoute::Fourier
                                                : XiRoute::Contour;
  return route == XiRoute::Fourier ? xi_t_fourier(spec, t, s, prec)
                                   : xi_t_contour(spec, t, s, prec);
}

ValueWithError b_tn(const LFunctionSpec& spec, double t, long n, const CxR& s,
                    const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  if (n < 1) throw DomainError("coefficient index must be >= 1");
  if (!(s.im >= Real(kJComposedYMin)))
    throw PoleCrossingError(
        "Gaussian window would reach the Gamma-pole region; need Im s >= 10");
  CxR sigma = j_map(spec, t, s);
  double at = std::fabs(t);
  Real at_r(at);
  Real ln_n = log(Real(n));
  Real c = sigma.re + at_r / 2 * ln_n;
  // Shifting the line from Re w = 2 to c sweeps the region between; no Gamma
  // pole may sit inside it.
  double pole_max = -1e300;
  for (const GammaFactorTerm& f : spec.gamma.factors) {
    double omega = static_cast<double>(f.omega);
    double mu_re = static_cast<double>(f.mu.re);
    for (int k = 0; k < 8; ++k) {
      double p = -(mu_re + k) / omega;
      if (std::fabs(p) < 1e-12 && spec.gamma.pole_order_m > 0)
        continue;  // cancelled by the w^m factor
      pole_max = std::max(pole_max, p);
    }
  }
  if (static_cast<double>(c) < pole_max + 0.5)
    throw PoleCrossingError("completed-square abscissa crosses a Gamma pole");
  CxR log_pref = -(sigma * ln_n) - CxR{at_r / 4 * ln_n * ln_n, Real(0)};
  double y0 = static_cast<double>(sigma.im);
  Real scale =
      xi_scale_log(spec, CxR{c, sigma.im}, prec.working_digits);
  Real target = prec.target_abs_err * exp(scale);
  auto f = [&](const Real& tau) -> std::pair<CxR, Real> {
    CxR w{c, tau};
    CxR lg = log_gamma_factor(spec, w);
    Real d = tau - sigma.im;
    CxR val = exp(lg - CxR{d * d / at_r, Real(0)});
    return {val, abs(val) * pow(Real(10), Real(-46))};
  };
  LineResult lr = sweep_line(f, spec.gamma, static_cast<double>(c),
                             static_cast<double>(sigma.re), y0, at, target,
                             4000);
  Real norm = sqrt(const_pi<Real>() * at_r);
  CxR pref = exp(log_pref);
  Real round_err = lr.peak * lr.total_len * pow(Real(10), Real(-46));
  return {lr.value * pref / norm,
          (lr.err + round_err) * abs(pref) / norm};
}

ValueWithError xi_t_over_gamma(const LFunctionSpec& spec, double t,
                               const CxR& s, const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  if (!(s.im >= Real(kJComposedYMin)))
    throw DomainError("map-composed evaluation needs Im s >= 10");
  CxR sigma = j_map(spec, t, s);
  CxR lgt = log_gamma_t(spec, t, s);
  // The kernel route loses digits equal to the result's own smallness; once
  // that eats the budget, integrate through the steepest-descent abscissa
  // instead, where integrand and result share a scale at every height.
  double lost_digits = -static_cast<double>(lgt.re) * kLog10E;
  ValueWithError xi;
  if (lost_digits + 14 <= prec.working_digits) {
    xi = xi_t_fourier(spec, t, sigma, prec);
  } else {
    Real target = prec.target_abs_err * exp(lgt.re);
    xi = detail::xi_gauss_line(spec, t, sigma, sigma.re, target, prec);
  }
  CxR inv = exp(-lgt);
  CxR ratio = xi.value * inv;
  Real err = xi.err * abs(inv) +
             abs(ratio) * pow(Real(10), Real(-prec.working_digits + 2));
  return {ratio, err};
}

Real deformed_series_residual(const LFunctionSpec& spec, double t,
                              const CxR& s, const PrecisionConfig& prec) {
  ValueWithError ratio = xi_t_over_gamma(spec, t, s, prec);
  ValueWithError ft = f_t_eval(spec, t, s, prec);
  return abs(ratio.value - ft.value);
}

}  // namespace xideform
