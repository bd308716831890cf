#include "xideform/mellin.hpp"

#include "xideform/detail/gammafactor.hpp"
#include "xideform/gammafn.hpp"
#include "xideform/quad.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace xideform {

namespace {

// Kernel numerator Psi(w) = w^m (w-1)^m prod Gamma(omega_j w + mu_j).
CxR psi_kernel_value(const MellinKernel& k, const CxR& w) {
  CxR acc{};
  for (const GammaFactorTerm& f : k.gamma.factors)
    acc += log_gamma(w * f.omega + f.mu);
  CxR v = exp(acc);
  for (int i = 0; i < k.gamma.pole_order_m; ++i) v *= w * (w - Real(1));
  return v;
}

// Terms d_j Gamma(a w + b + j) representing w^m (w-1)^m Gamma(a w + b).
std::vector<CxR> reduction_coeffs(const GammaData& g) {
  Real a = g.factors[0].omega;
  CxR b = g.factors[0].mu;
  int m = g.pole_order_m;
  // (w^2 - w)^m = sum_k binom(m,k) (-1)^{m-k} w^{m+k}
  std::vector<Real> poly(2 * m + 1, Real(0));
  Real binom = 1;
  for (int k = 0; k <= m; ++k) {
    poly[m + k] = ((m - k) % 2 == 0 ? binom : -binom);
    binom = binom * (m - k) / (k + 1);
  }
  // Repeatedly multiply the shift representation by w:
  //   w Gamma(aw + b + j) = (1/a) Gamma(aw+b+j+1) - ((b+j)/a) Gamma(aw+b+j)
  std::vector<CxR> power{{Real(1), Real(0)}};  // index = shift j
  std::vector<CxR> out(2 * m + 1, CxR{});
  for (int p = 0; p <= 2 * m; ++p) {
    if (!(poly[p] == Real(0)))
      for (std::size_t j = 0; j < power.size(); ++j) {
        if (out.size() <= j) out.resize(j + 1, CxR{});
        out[j] += power[j] * poly[p];
      }
    std::vector<CxR> next(power.size() + 1, CxR{});
    for (std::size_t j = 0; j < power.size(); ++j) {
      next[j + 1] += power[j] / a;
      next[j] += power[j] * (-(b + Real(static_cast<long>(j))) / a);
    }
    power = std::move(next);
  }
  return out;
}

}  // namespace

MellinKernel kernel_from_gamma(const GammaData& gamma) {
  MellinKernel k;
  k.gamma = gamma;
  k.mode = gamma.factors.size() == 1 ? MellinKernel::Mode::ClosedForm
                                     : MellinKernel::Mode::Quadrature;
  return k;
}

CxR psi_closed(const MellinKernel& kernel, const Real& v) {
  if (kernel.mode != MellinKernel::Mode::ClosedForm ||
      kernel.gamma.factors.size() != 1)
    throw ModeError("closed form needs exactly one Gamma factor");
  if (!(v > 0)) throw DomainError("psi requires v > 0");
  Real a = kernel.gamma.factors[0].omega;
  CxR b = kernel.gamma.factors[0].mu;
  std::vector<CxR> d = reduction_coeffs(kernel.gamma);
  Real va = pow(v, 1 / a);  // v^{1/a}
  Real decay = exp(-va);
  CxR acc{};
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] == CxR{}) continue;
    CxR expo = (b + Real(static_cast<long>(j))) / a;
    acc += d[j] * exp(expo * log(v));
  }
  return acc * (decay / a);
}

ValueWithError psi_quad(const MellinKernel& kernel, const Real& v,
                        const PrecisionConfig& prec) {
  check_precision_config(prec);
  if (!(v > 0)) throw DomainError("psi requires v > 0");
  const GammaData& g = kernel.gamma;
  if (g.factors.empty()) throw DomainError("kernel has no Gamma factors");
  // Abscissa right of every pole of the kernel numerator.
  Real c = 2;
  Real omega_sum = 0;
  for (const GammaFactorTerm& f : g.factors) {
    c = std::max(c, 1 + (1 - f.mu.re) / f.omega);
    omega_sum += f.omega;
  }
  const Real pi = const_pi<Real>();
  Real logv = log(v);
  auto integrand = [&](const Real& tau) {
    CxR w{c, tau};
    return psi_kernel_value(kernel, w) * exp(CxR{-c, -tau} * logv);
  };
  auto phase_rate = [&](const Real& tau) {
    Real r = fabs(logv);
    for (const GammaFactorTerm& f : g.factors)
      r += f.omega * log(f.omega * (fabs(tau) + 2) + abs(f.mu) + 2);
    r += Real(2 * g.pole_order_m) / (fabs(tau) + 1);
    return r;
  };

  const Real target = prec.target_abs_err;
  CxR acc{};
  Real err = 0;
  Real peak = 0;
  // Expand symmetric panels outward from tau = 0 until the decay rate
  // certifies the tail.
  Real decay_rate = (pi / 2) * omega_sum * Real("0.7");
  for (int side = 0; side < 2; ++side) {
    Real tau = 0;
    int quiet = 0;
    long panels = 0;
    while (true) {
      Real width = std::min(Real(2), (pi / 2) / phase_rate(tau));
      Real lo = tau, hi = tau + width;
      auto f = [&](const Real& x) {
        return side == 0 ? integrand(x) : integrand(-x);
      };
      CxR i16 = gl_panel(f, lo, hi, 16);
      acc += i16;
      if (abs(i16) > target / 4) {
        CxR i8 = gl_panel(f, lo, hi, 8);
        err += abs(i16 - i8);
      } else {
        err += abs(i16) / 8;  // panel already below target scale
      }
      peak = std::max(peak, abs(i16) / width);
      tau = hi;
      if (abs(i16) < target / 8) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      if (++panels > prec.max_terms)
        throw PrecisionError("psi quadrature panel budget exceeded");
    }
    // Gaussian-free analytic tail from the exponential Gamma decay.
    err += abs(integrand(side == 0 ? tau : -tau)) / decay_rate;
  }
  acc = acc / (2 * pi);
  err = err / (2 * pi);
  err += peak * pow(Real(10), Real(-prec.working_digits));
  if (err > target * 1000 && err > abs(acc))
    throw PrecisionError("psi quadrature error estimate above target");
  return {acc, err};
}

Real psi_bound(const MellinKernel& kernel, const Real& v) {
  if (kernel.mode == MellinKernel::Mode::ClosedForm) {
    Real a = kernel.gamma.factors[0].omega;
    CxR b = kernel.gamma.factors[0].mu;
    std::vector<CxR> d = reduction_coeffs(kernel.gamma);
    Real va = pow(v, 1 / a);
    Real acc = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      Real re_expo = (b.re + Real(static_cast<long>(j))) / a;
      acc += abs(d[j]) * pow(v, re_expo);
    }
    return acc * exp(-va) / a;
  }
  // |psi(v)| <= v^{-c} (1/2pi) int |Psi(c+i tau)| d tau for any admissible c;
  // minimize a crude Stirling-width estimate over a grid of abscissae.
  Real c_min = 2;
  for (const GammaFactorTerm& f : kernel.gamma.factors)
    c_min = std::max(c_min, 1 + (1 - f.mu.re) / f.omega);
  Real best = -1;
  for (int k = 0; k < 24; ++k) {
    Real c = c_min + Real(2 * k);
    CxR w{c, Real(0)};
    Real mag = abs(psi_kernel_value(kernel, w));
    Real est = mag * pow(v, -c) * 3;  // effective width of the Gamma bell
    if (best < 0 || est < best) best = est;
  }
  return best;
}

ValueWithError phi_zeta(const Real& u, const PrecisionConfig& prec,
                        bool use_evenness) {
  check_precision_config(prec);
  if (u < 0 && use_evenness) return phi_zeta(-u, prec, false);
  if (u < -2)
    throw PrecisionError(
        "phi term count blows up for u < -2; pass use_evenness to fold");
  const Real pi = const_pi<Real>();
  Real e4 = exp(4 * u), e5 = exp(5 * u), e9 = exp(9 * u);
  Real acc = 0;  // leading factor 4 applied at the end
  Real peak = 0;
  Real tail = 0;
  long n = 1;
  while (true) {
    Real n2 = Real(n) * n;
    Real term = (2 * pi * pi * n2 * n2 * e9 - 3 * pi * n2 * e5) *
                exp(-pi * n2 * e4);
    acc += term;
    peak = std::max(peak, fabs(term));
    Real gap = pi * Real(2 * n + 1) * e4;  // exponent drop to the next term
    if (gap > 3 && fabs(term) * 9 < prec.target_abs_err) {
      tail = fabs(term) * 2 / (1 - exp(-gap));
      break;
    }
    if (++n > prec.max_terms)
      throw PrecisionError("phi term budget exceeded");
  }
  Real err = tail + peak * pow(Real(10), Real(-prec.working_digits)) * n;
  return {CxR{4 * acc, Real(0)}, 4 * err};
}

ValueWithError phi_F(const LFunctionSpec& spec, const Real& u,
                     const PrecisionConfig& prec) {
  check_precision_config(prec);
  MellinKernel kernel = kernel_from_gamma(spec.gamma);
  bool closed = kernel.mode == MellinKernel::Mode::ClosedForm;
  Real scale = 2 * abs(spec.gamma.alpha) * exp(u);
  Real e2 = exp(2 * u);
  const Real target = prec.target_abs_err;
  long support = coeff_support_end(spec);

  CxR acc{};
  Real err = 0;
  int shrinking = 0;
  Real prev_mag = -1;
  long n = 1;
  while (true) {
    if (support > 0 && n > support) break;
    Real v = Real(n) * e2 / spec.gamma.bigQ;
    CxR a = coeff(spec, n);
    Real a_mag = abs(a);
    if (!(a == CxR{})) {
      Real term_mag = 0;
      if (closed) {
        CxR p = psi_closed(kernel, v);
        acc += a * p;
        term_mag = a_mag * abs(p);
        err += a_mag * abs(p) * pow(Real(10), Real(-prec.working_digits)) * 4;
      } else {
        ValueWithError p = psi_quad(kernel, v, prec);
        acc += a * p.value;
        term_mag = a_mag * abs(p.value);
        err += a_mag * p.err;
      }
      if (prev_mag >= 0 && term_mag <= prev_mag) ++shrinking;
      else shrinking = 0;
      prev_mag = term_mag;
    }
    if (support == 0 && shrinking >= 3) {
      Real env = psi_bound(kernel, Real(n + 1) * e2 / spec.gamma.bigQ) *
                 coeff_envelope(spec, n + 1);
      if (scale * env * (n + 4) < target / 3) {
        err += scale * env * (n + 4);
        break;
      }
    }
    if (++n > prec.max_terms)
      throw PrecisionError("phi_F term budget exceeded");
  }
  CxR result = acc * CxR{scale, Real(0)};
  // alpha's phase matters, not just its modulus.
  CxR alpha_unit = spec.gamma.alpha / abs(spec.gamma.alpha);
  result = result * alpha_unit;
  return {result, err};
}

}  // namespace xideform
