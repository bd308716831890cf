#pragma once

// Argument-principle counting, quadrisection + Newton location, Rouche
// certification that zeros of the deformed series force zeros of xi_t, and
// the end-to-end off-critical-line witness.

#include "xideform/xieval.hpp"

#include <functional>
#include <string>
#include <vector>

namespace xideform {

struct Rect {
  double x_lo, x_hi, y_lo, y_hi;
};

void check_rect(const Rect& r);

struct ZeroRecord {
  CxD center{};
  double residual = 0;  // |f| at center
  int newton_steps = 0;
  std::string method;  // "newton" or "cell" (unconverged cell center)
  bool converged = false;
};

struct CertifiedZero {
  CxD disk_center{};      // in the xi_t plane: J_t image of the series zero
  double disk_radius = 0;  // image radius bound: r * sup |J_t'| on the circle
  double delta = 0;        // padded min |F_t| over the certification circle
  double sup_residual = 0;  // padded sup |xi_t(J_t)/gamma_t - F_t|
  std::string claim;
  CxD series_zero{};      // the certified F_t zero, s plane
  double circle_radius = 0;  // certification circle radius, s plane
};

using AnalyticFn = std::function<CxD(const CxD&)>;

// Winding number of f along the rectangle boundary, sampled adaptively so
// consecutive phase steps stay under pi/2 and |f| > err_floor everywhere.
// Edges are jittered by multiples of 1e-3 up to 5 times before giving up
// with BoundaryZeroError.
long count_zeros(const AnalyticFn& f, const Rect& rect, double err_floor,
                 const PrecisionConfig& prec);

// Quadrisection to single-zero cells, then Newton with a finite-difference
// derivative. Records are sorted by Im; unconverged cells are flagged, not
// dropped.
std::vector<ZeroRecord> locate_zeros(const AnalyticFn& f, const Rect& rect,
                                     double err_floor, double tol,
                                     const PrecisionConfig& prec);

// delta = padded min |F_t| on the circle of radius r around the zero; sup =
// padded max |xi_t(J_t(s))/gamma_t(s) - F_t(s)| there. Certifies only when
// sup < 0.9 * delta; sampling is doubled from 128 points until both sides
// are stable to 1%.
CertifiedZero rouche_certify(const LFunctionSpec& spec, double t,
                             const ZeroRecord& rho, double radius,
                             const PrecisionConfig& prec);

struct PairedZero {
  ZeroRecord series_zero;
  CxD xi_zero_preimage{};  // s with xi_t(J_t(s)) = 0, s plane
  double distance = 0;     // |preimage - series zero|
  bool matched = false;
};

// For each F_t zero in the strip, Newton on xi_t(J_t(.))/gamma_t from the
// zero; nearest-neighbour pairing with unmatched entries flagged.
std::vector<PairedZero> pair_zeros(const LFunctionSpec& spec, double t,
                                   const Rect& strip,
                                   const PrecisionConfig& prec);

// Scans strips upward (stepping by an almost-period of F_t when one is
// found) until some F_t zero certifies with its image disk strictly right of
// the critical line. Throws WitnessNotFoundError when the budget runs out.
CertifiedZero newman_witness(const LFunctionSpec& spec, double t,
                             const PrecisionConfig& prec);

// Double-precision F_t evaluator over Re s >= rect.x_lo, with the error
// floor to use for zero counting.
struct FtScanFn {
  detail::FtSeriesPlan plan;
  CxD operator()(const CxD& s) const { return plan.eval(s); }
};
FtScanFn make_ft_scan(const LFunctionSpec& spec, double t, double x_min,
                      double target_log10);

}  // namespace xideform
