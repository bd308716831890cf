#include "xideform/deform.hpp"

#include <algorithm>
#include <cmath>

namespace xideform {

void check_deform_t(double t, double cap) {
  if (t == 0) throw DomainError("deformation machinery needs t < 0");
  if (t > 0) throw DomainError("deformation machinery needs t < 0");
  if (-t > cap)
    throw DomainError("|t| exceeds the supported deformation cap");
}

CxR log_gamma_factor(const LFunctionSpec& spec, const CxR& s) {
  return detail::log_gamma_factor_core(spec.gamma, s);
}

ValueWithError gamma_factor(const LFunctionSpec& spec, const CxR& s,
                            const PrecisionConfig& prec) {
  check_precision_config(prec);
  // Log-space throughout once |Im s| is large; below that the direct product
  // and the log route coincide to rounding, so the log route serves both.
  CxR lg = log_gamma_factor(spec, s);
  if (lg.re > Real("2e6"))  // exponent budget of the mpfr scalar is far larger
    throw PrecisionError("gamma factor overflows the exponent budget");
  CxR v = exp(lg);
  Real rel = pow(Real(10), Real(-prec.working_digits + 2));
  return {v, abs(v) * rel * (1 + fabs(lg.re))};
}

CxR j_map(const LFunctionSpec& spec, double t, const CxR& s) {
  if (t > 0 || -t > kDeformTCap)
    throw DomainError("J_t defined here for -cap <= t <= 0");
  return detail::j_map_t(spec.gamma, t, s);
}

CxR log_gamma_t(const LFunctionSpec& spec, double t, const CxR& s) {
  check_deform_t(t);
  return detail::log_gamma_t_t(spec, t, s);
}

ValueWithError gamma_t(const LFunctionSpec& spec, double t, const CxR& s,
                       const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  CxR lg = log_gamma_t(spec, t, s);
  CxR v = exp(lg);
  Real rel = pow(Real(10), Real(-prec.working_digits + 2));
  return {v, abs(v) * rel * (1 + fabs(lg.re))};
}

namespace detail {

double f_t_term_log10(const LFunctionSpec& spec, double t, double re_s,
                      long n) {
  double env = static_cast<double>(coeff_envelope(spec, n));
  if (env == 0) return -1e9;
  double ln = std::log(static_cast<double>(n));
  return std::log10(env) +
         (-std::fabs(t) * ln * ln / 4 - re_s * ln) / 2.302585092994046;
}

double f_t_tail_log10(const LFunctionSpec& spec, double t, double re_s,
                      long n) {
  long support = coeff_support_end(spec);
  if (support > 0 && n > support) return -1e9;
  // sum_{k >= n} term(k) ~ term(n) * n / r by the substitution u = log k;
  // r is the decay rate of the exponent in u.
  double ln = std::log(static_cast<double>(n));
  double r = std::max(std::fabs(t) * ln / 2 + re_s - 1, 0.3);
  return f_t_term_log10(spec, t, re_s, n) +
         std::log10(static_cast<double>(n) / r);
}

long f_t_terms_log10(const LFunctionSpec& spec, double t, double re_s,
                     double target_log10, long max_terms) {
  long support = coeff_support_end(spec);
  if (support > 0) return support;
  // The term envelope is eventually strictly decreasing; require three
  // consecutive decreases with the full tail estimate below target before
  // cutting.
  double prev = 1e300;
  int ok = 0;
  for (long n = 1;; ++n) {
    if (n > max_terms)
      throw PrecisionError("deformed series truncation exceeds max_terms");
    double b = f_t_term_log10(spec, t, re_s, n);
    if (b < prev && f_t_tail_log10(spec, t, re_s, n) < target_log10) {
      if (++ok >= 3) return n;
    } else {
      ok = 0;
    }
    prev = b;
  }
}

FtSeriesPlan make_ft_plan(const LFunctionSpec& spec, double t, double x_min,
                          double target_log10, long max_terms) {
  check_deform_t(t, kSeriesTCap);
  FtSeriesPlan plan;
  plan.x_min = x_min;
  long n_cut = f_t_terms_log10(spec, t, x_min, target_log10, max_terms);
  plan.tail = 3 * std::pow(10.0, f_t_tail_log10(spec, t, x_min, n_cut + 1));
  double at = std::fabs(t);
  for (long n = 1; n <= n_cut; ++n) {
    CxD a = coeff_d(spec, n);
    if (a == CxD{}) continue;
    double ln = std::log(static_cast<double>(n));
    plan.weighted_coeff.push_back(a * std::exp(-at * ln * ln / 4));
    plan.log_n.push_back(ln);
  }
  return plan;
}

}  // namespace detail

long f_t_terms(const LFunctionSpec& spec, double t, double re_s,
               double target_log10, long max_terms) {
  check_deform_t(t, kSeriesTCap);
  return detail::f_t_terms_log10(spec, t, re_s, target_log10, max_terms);
}

ValueWithError f_t_eval(const LFunctionSpec& spec, double t, const CxR& s,
                        const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t, kSeriesTCap);
  double target_log10 =
      static_cast<double>(log10(prec.target_abs_err / 2));
  Real tail = 0;
  CxR v = detail::f_t_series(spec, t, s, target_log10, prec.max_terms, &tail);
  Real round_err =
      pow(Real(10), Real(-prec.working_digits)) * (abs(v) + 1) * 8;
  return {v, tail + round_err};
}

ValueWithError f_t_tilde(const LFunctionSpec& spec, double t, const Real& x,
                         const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t, kSeriesTCap);
  double target_log10 =
      static_cast<double>(log10(prec.target_abs_err / 2));
  long n_cut = detail::f_t_terms_log10(spec, t, static_cast<double>(x),
                                       target_log10, prec.max_terms);
  Real at = fabs(Real(t));
  Real acc = 0;
  for (long n = 1; n <= n_cut; ++n) {
    Real a = abs(coeff(spec, n));
    if (a == 0) continue;
    Real ln = log(Real(n));
    acc += a * exp(-at * ln * ln / 4 - x * ln);
  }
  Real tail = Real(3 * std::pow(10.0, detail::f_t_tail_log10(
                                          spec, t, static_cast<double>(x),
                                          n_cut + 1)));
  return {CxR{acc, Real(0)}, tail};
}

GammaDecayFit gamma_decay_fit(const LFunctionSpec& spec, double x,
                              std::pair<double, double> y_range, int samples) {
  if (samples < 2) throw DomainError("need at least two samples");
  double y_lo = y_range.first, y_hi = y_range.second;
  if (!(y_lo > 0) || !(y_hi > y_lo)) throw DomainError("bad y range");
  // Stay inside the sector where the asymptotics are uniform, and at unit
  // distance from every Gamma pole on the real axis.
  if (std::fabs(x) > 4 * std::pow(y_lo, 2.0 / 3.0))
    throw DomainError("x outside the fitted decay region");
  for (const GammaFactorTerm& f : spec.gamma.factors) {
    double omega = static_cast<double>(f.omega);
    double mu_re = static_cast<double>(f.mu.re);
    double mu_im = static_cast<double>(f.mu.im);
    for (int k = 0; k < 200; ++k) {
      double px = -(mu_re + k) / omega;
      double py = -mu_im / omega;
      if (std::hypot(x - px, y_lo - py) < 1)
        throw DomainError("sample within unit distance of a Gamma pole");
    }
  }
  std::vector<double> ys(samples), ls(samples);
  for (int i = 0; i < samples; ++i) {
    double y = y_lo + (y_hi - y_lo) * i / (samples - 1);
    CxR lg = log_gamma_factor(spec, CxR{Real(x), Real(y)});
    ys[i] = y;
    ls[i] = -static_cast<double>(lg.re);
  }
  double my = 0, ml = 0;
  for (int i = 0; i < samples; ++i) { my += ys[i]; ml += ls[i]; }
  my /= samples; ml /= samples;
  double cov = 0, var = 0;
  for (int i = 0; i < samples; ++i) {
    cov += (ys[i] - my) * (ls[i] - ml);
    var += (ys[i] - my) * (ys[i] - my);
  }
  double slope = cov / var;
  double ratio_min = 1e300, ratio_max = -1e300;
  for (int i = 0; i < samples; ++i) {
    double r = ls[i] / ys[i];
    ratio_min = std::min(ratio_min, r);
    ratio_max = std::max(ratio_max, r);
  }
  // Sandwich rates from the sample ratios: exp(-K' y) <= |gamma| <=
  // exp(-K y) with K = ratio_min, K' = ratio_max.
  double violation = 0;
  for (int i = 0; i < samples; ++i) {
    violation = std::max(violation, ls[i] - ratio_max * ys[i]);
    violation = std::max(violation, ratio_min * ys[i] - ls[i]);
  }
  return {slope, ratio_max, std::max(violation, 0.0)};
}

}  // namespace xideform
