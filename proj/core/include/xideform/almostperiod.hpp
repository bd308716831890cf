#pragma once

// Vertical almost-periods of the deformed series: shifts tau making
// F_t(s + i tau) uniformly close to F_t(s) on a strip. Used to climb zero
// configurations to heights where the approximation residual is small.

#include "xideform/zerofind.hpp"

namespace xideform {

struct ShiftRecord {
  double tau = 0;
  double epsilon = 0;
  Rect strip{};
  double sup_sampled = 0;  // sup over the verification grid, < epsilon
};

// Shifts in (0, tau_max], strictly increasing, each verified on a
// 0.01 x 0.25 grid over the strip. Candidates are pruned by the dominant
// terms first: tau is only grid-checked when every weighted term
// |a_n| e^{-|t| log^2 n / 4} n^{-x_lo} |n^{-i tau} - 1| with n <= N_dom stays
// under epsilon / 2, where N_dom covers everything contributing more than
// epsilon / 4 to the majorant series.
std::vector<ShiftRecord> find_shifts(const LFunctionSpec& spec, double t,
                                     const Rect& strip, double epsilon,
                                     double tau_max, int count,
                                     const PrecisionConfig& prec);

// Sup of |F_t(s + i tau) - F_t(s)| over a grid with spacing
// (0.01, 0.25) / grid_density.
double verify_shift(const LFunctionSpec& spec, double t, const Rect& strip,
                    double tau, double epsilon, int grid_density,
                    const PrecisionConfig& prec);

}  // namespace xideform
