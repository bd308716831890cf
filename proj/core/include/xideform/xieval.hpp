#pragma once

// Deformed completed function xi_t by two independent routes (Fourier kernel
// and Gaussian-weighted vertical-line integral), the per-coefficient line
// integrals B_{t,n}, and the residual of the deformed-series approximation.

#include "xideform/deform.hpp"

namespace xideform {

// Minimum Im s for anything composed with j_map; keeps the Gaussian windows
// of the line integrals away from the Gamma poles on the real axis.
inline constexpr double kJComposedYMin = 10.0;

struct QuadraturePlan {
  Real contour_abscissa{};  // vertical-line route: Re w of the contour
  Real half_height{};       // truncation half-length around the window center
  long panel_count = 0;
  Real u_cutoff{};          // Fourier route: integration support is [-U, U]
  Real step_bound{};        // max node spacing; phase per node step <= pi/4
};

QuadraturePlan fourier_plan(const LFunctionSpec& spec, double t, const CxR& s,
                            const PrecisionConfig& prec);
QuadraturePlan contour_plan(const LFunctionSpec& spec, double t, const CxR& s,
                            const Real& abscissa, const PrecisionConfig& prec);

// integral of e^{t u^2} Phi_F(u) e^{(2s-1)u} du over the real line.
ValueWithError xi_t_fourier(const LFunctionSpec& spec, double t, const CxR& s,
                            const PrecisionConfig& prec);

// Gaussian-weighted integral of xi^F along Re w = 2. Refuses (PrecisionError)
// when the cancellation headroom exceeds the digit budget.
ValueWithError xi_t_contour(const LFunctionSpec& spec, double t, const CxR& s,
                            const PrecisionConfig& prec);

enum class XiRoute { Auto, Fourier, Contour };

// Auto: Fourier for |Re s - 1/2| <= 3, vertical-line route otherwise.
ValueWithError xi_t_eval(const LFunctionSpec& spec, double t, const CxR& s,
                         const PrecisionConfig& prec,
                         XiRoute route = XiRoute::Auto);

// Per-coefficient Gaussian line integral of gamma(w) n^{-w}, taken on the
// completed-square abscissa Re w = Re(J_t(s)) + (|t|/2) log n so only gamma's
// phase oscillates. Summed against a_n this reconstructs xi_t(J_t(s)).
ValueWithError b_tn(const LFunctionSpec& spec, double t, long n, const CxR& s,
                    const PrecisionConfig& prec);

// xi_t(J_t(s)) / gamma_t(s): the quantity the deformed series approximates.
// Evaluated through a steepest-descent abscissa when the Fourier route runs
// out of cancellation headroom, so it stays usable at any height.
ValueWithError xi_t_over_gamma(const LFunctionSpec& spec, double t,
                               const CxR& s, const PrecisionConfig& prec);

// |xi_t(J_t(s))/gamma_t(s) - F_t(s)|.
Real deformed_series_residual(const LFunctionSpec& spec, double t,
                              const CxR& s, const PrecisionConfig& prec);

namespace detail {

// Envelope bound on |Phi_F(u)|.
Real phi_F_envelope(const LFunctionSpec& spec, const Real& u);

// (1/(i sqrt(pi |t|))) int_{c-i inf}^{c+i inf} xi^F(w) e^{(sigma-w)^2/|t|} dw
// with absolute stopping target target_abs.
ValueWithError xi_gauss_line(const LFunctionSpec& spec, double t,
                             const CxR& sigma, const Real& c,
                             const Real& target_abs,
                             const PrecisionConfig& prec);

}  // namespace detail

}  // namespace xideform
