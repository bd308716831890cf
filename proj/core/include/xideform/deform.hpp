#pragma once

// Deformation-side objects: the completed-function prefactor gamma, the
// coordinate map J_t, the deformed prefactor gamma_t, the deformed series
// F_t and its majorant, and decay diagnostics for gamma.

#include "xideform/detail/gammafactor.hpp"
#include "xideform/precision.hpp"
#include "xideform/selberg.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace xideform {

// |t| cap for the approximation machinery (the J_t/gamma_t/xi_t side is only
// accurate for moderate |t|); the series itself converges for every t < 0,
// so series-only entry points take the looser cap.
inline constexpr double kDeformTCap = 4.0;
inline constexpr double kSeriesTCap = 64.0;
inline constexpr double kJmapSectorEps = 1e-3;

// Checks t < 0 and |t| <= cap.
void check_deform_t(double t, double cap = kDeformTCap);

ValueWithError gamma_factor(const LFunctionSpec& spec, const CxR& s,
                            const PrecisionConfig& prec);

// log of the gamma factor, branch-consistent with gamma_factor.
CxR log_gamma_factor(const LFunctionSpec& spec, const CxR& s);

CxR j_map(const LFunctionSpec& spec, double t, const CxR& s);

ValueWithError gamma_t(const LFunctionSpec& spec, double t, const CxR& s,
                       const PrecisionConfig& prec);
CxR log_gamma_t(const LFunctionSpec& spec, double t, const CxR& s);

ValueWithError f_t_eval(const LFunctionSpec& spec, double t, const CxR& s,
                        const PrecisionConfig& prec);

// Majorant series: sum over n of e^{-|t| log^2 n / 4} |a_n| n^{-x}.
ValueWithError f_t_tilde(const LFunctionSpec& spec, double t, const Real& x,
                         const PrecisionConfig& prec);

// Truncation length that f_t_eval would use.
long f_t_terms(const LFunctionSpec& spec, double t, double re_s,
               double target_log10, long max_terms);

struct GammaDecayFit {
  double k_fit;          // least-squares slope of -log|gamma(x+iy)| vs y
  double k_prime_fit;    // slope plus intercept spread, the lower-rate line
  double max_violation;  // sandwich violation at the samples (expected 0)
};

GammaDecayFit gamma_decay_fit(const LFunctionSpec& spec, double x,
                              std::pair<double, double> y_range, int samples);

namespace detail {

template <class T>
void j_map_sector_check(const Cx<T>& s) {
  if (s == Cx<T>{}) throw DomainError("J_t undefined at s = 0");
  double a = std::fabs(
      std::atan2(static_cast<double>(s.im), static_cast<double>(s.re)));
  if (a >= 3.14159265358979323846 - kJmapSectorEps)
    throw DomainError("J_t argument outside the principal-branch sector");
}

template <class T>
Cx<T> j_map_t(const GammaData& g, double t, const Cx<T>& s) {
  using std::log;
  j_map_sector_check(s);
  Cx<T> acc = s;
  if (t == 0) return acc;
  T half_at = T(std::fabs(t)) / T(2);
  acc.re += half_at * log(static_cast<T>(g.bigQ));
  for (const GammaFactorTerm& f : g.factors) {
    T omega = static_cast<T>(f.omega);
    acc += xideform::log(s * omega) * (half_at * omega);
  }
  return acc;
}

template <class T>
Cx<T> log_gamma_factor_t(const LFunctionSpec& spec, const Cx<T>& s) {
  return log_gamma_factor_core(spec.gamma, s);
}

template <class T>
Cx<T> log_gamma_t_t(const LFunctionSpec& spec, double t, const Cx<T>& s) {
  if (t == 0) throw DomainError("gamma_t needs t < 0");
  Cx<T> j = j_map_t(spec.gamma, t, s);
  Cx<T> d = s - j;
  return log_gamma_factor_t<T>(spec, s) + d * d / T(std::fabs(t));
}

// One deformed-series term envelope at term n (log10 scale, double math):
// coefficient envelope * e^{-|t| log^2 n / 4} * n^{-x}.
double f_t_term_log10(const LFunctionSpec& spec, double t, double re_s,
                      long n);

// log10 bound on the whole tail sum from term n on. The terms decay like
// e^{-|t| log^2 n / 4}, i.e. slowly: the tail is roughly the first omitted
// term times n over the local decay rate, not a constant multiple of it.
double f_t_tail_log10(const LFunctionSpec& spec, double t, double re_s,
                      long n);

// Truncation length for target 10^{target_log10}; throws PrecisionError past
// max_terms.
long f_t_terms_log10(const LFunctionSpec& spec, double t, double re_s,
                     double target_log10, long max_terms);

// Deformed series with explicit truncation control; target_log10 is the
// decimal exponent of the absolute tail target.
template <class T>
Cx<T> f_t_series(const LFunctionSpec& spec, double t, const Cx<T>& s,
                 double target_log10, long max_terms, T* tail_out = nullptr) {
  using std::log;
  using std::exp;
  check_deform_t(t, kSeriesTCap);
  long n_cut = f_t_terms_log10(spec, t, static_cast<double>(s.re),
                               target_log10, max_terms);
  T at = T(std::fabs(t));
  Cx<T> acc{};
  for (long n = 1; n <= n_cut; ++n) {
    CxR a_full = coeff(spec, n);
    if (a_full == CxR{}) continue;
    Cx<T> a{static_cast<T>(a_full.re), static_cast<T>(a_full.im)};
    T ln = log(T(n));
    acc += a * (exp(-at * ln * ln / 4) * xideform::exp(s * (-ln)));
  }
  if (tail_out)
    *tail_out = T(3 * std::pow(10.0, f_t_tail_log10(spec, t,
                                                    static_cast<double>(s.re),
                                                    n_cut + 1)));
  return acc;
}

// Reusable plan for repeated double-precision evaluations across a region;
// valid for Re s >= x_min.
struct FtSeriesPlan {
  double x_min;
  double tail;  // absolute tail bound at Re s = x_min
  std::vector<CxD> weighted_coeff;  // a_n e^{-|t| log^2 n / 4}, zeros skipped
  std::vector<double> log_n;

  // Compensated summation: tens of thousands of terms would otherwise leave
  // ~1e-10 of rounding noise, above the zero-residual tolerance.
  CxD eval(const CxD& s) const {
    double sr = 0, si = 0, cr = 0, ci = 0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      double e = std::exp(-s.re * log_n[i]);
      double ph = -s.im * log_n[i];
      CxD term = weighted_coeff[i] * CxD{e * std::cos(ph), e * std::sin(ph)};
      double yr = term.re - cr;
      double tr = sr + yr;
      cr = (tr - sr) - yr;
      sr = tr;
      double yi = term.im - ci;
      double ti = si + yi;
      ci = (ti - si) - yi;
      si = ti;
    }
    return {sr, si};
  }
};

FtSeriesPlan make_ft_plan(const LFunctionSpec& spec, double t, double x_min,
                          double target_log10, long max_terms);

}  // namespace detail

}  // namespace xideform
