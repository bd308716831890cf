#include "xideform/almostperiod.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xideform {

namespace {

struct DomTerm {
  double log_n;
  double weight;  // |a_n| e^{-|t| log^2 n / 4} n^{-x_lo}
};

std::vector<DomTerm> dominant_terms(const LFunctionSpec& spec, double t,
                                    double x_lo, double epsilon) {
  // Everything past N_dom contributes less than epsilon / 4 to the majorant.
  long n_dom = 1;
  while (detail::f_t_tail_log10(spec, t, x_lo, n_dom + 1) >=
         std::log10(epsilon / 4)) {
    if (++n_dom > 2000000)
      throw PrecisionError("dominant-term cutoff not found");
  }
  std::vector<DomTerm> out;
  double at = std::fabs(t);
  for (long n = 2; n <= n_dom; ++n) {
    CxD a = coeff_d(spec, n);
    double am = std::hypot(a.re, a.im);
    if (am == 0) continue;
    double ln = std::log(static_cast<double>(n));
    out.push_back({ln, am * std::exp(-at * ln * ln / 4 - x_lo * ln)});
  }
  return out;
}

double grid_sup(const detail::FtSeriesPlan& plan, const Rect& strip,
                double tau, double dx, double dy) {
  double sup = 0;
  long nx = std::max(1L, std::lround((strip.x_hi - strip.x_lo) / dx));
  long ny = std::max(1L, std::lround((strip.y_hi - strip.y_lo) / dy));
  for (long i = 0; i <= nx; ++i) {
    double x = strip.x_lo + (strip.x_hi - strip.x_lo) * i / nx;
    for (long j = 0; j <= ny; ++j) {
      double y = strip.y_lo + (strip.y_hi - strip.y_lo) * j / ny;
      CxD d = plan.eval(CxD{x, y + tau}) - plan.eval(CxD{x, y});
      sup = std::max(sup, std::hypot(d.re, d.im));
    }
  }
  return sup;
}

}  // namespace

std::vector<ShiftRecord> find_shifts(const LFunctionSpec& spec, double t,
                                     const Rect& strip, double epsilon,
                                     double tau_max, int count,
                                     const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t, kSeriesTCap);
  check_rect(strip);
  if (!(epsilon > 0)) throw DomainError("epsilon must be > 0");
  if (!(tau_max > 0) || !std::isfinite(tau_max))
    throw DomainError("tau_max must be positive and finite");
  if (count < 1) throw DomainError("count must be >= 1");

  std::vector<DomTerm> dom = dominant_terms(spec, t, strip.x_lo, epsilon);
  FtScanFn ft = make_ft_scan(spec, t, strip.x_lo, -8);

  if (dom.empty()) {
    // Single-term series: every shift works; report the first grid tau.
    ShiftRecord rec{0.01, epsilon, strip, 0.0};
    return {rec};
  }

  // Cheap per-term pruning pass over the tau grid; survivors are ranked by
  // the aggregate first-order bound and grid-checked best-first. When the
  // whole coarse grid washes out (strips hugging the real axis need tau
  // below the first coarse step), the grid is refined into its lowest cell.
  struct Candidate {
    double tau;
    double bound;
  };
  std::vector<ShiftRecord> found;
  double best_sup = 1e300;
  double dtau = 0.01;
  double tau_hi = tau_max;
  for (int refine = 0; refine < 4 && found.empty(); ++refine) {
    if (refine > 0) {
      tau_hi = dtau;
      dtau /= 10;
    }
    std::vector<Candidate> cands;
    for (double tau = dtau; tau <= tau_hi; tau += dtau) {
      double bound = 0;
      bool ok = true;
      for (const DomTerm& d : dom) {
        double osc = 2 * std::fabs(std::sin(tau * d.log_n / 2));
        double contrib = d.weight * osc;
        if (contrib > epsilon / 2) {
          ok = false;
          break;
        }
        bound += contrib;
      }
      if (ok) cands.push_back({tau, bound});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.bound < b.bound;
                     });
    long full_checks = 0;
    for (const Candidate& c : cands) {
      if (static_cast<int>(found.size()) >= count) break;
      if (full_checks >= 400) break;
      // coarse screen before the full grid
      double coarse = grid_sup(ft.plan, strip, c.tau, 0.05, 1.0);
      best_sup = std::min(best_sup, coarse);
      if (coarse >= epsilon * 0.95) continue;
      ++full_checks;
      double sup = grid_sup(ft.plan, strip, c.tau, 0.01, 0.25);
      best_sup = std::min(best_sup, sup);
      if (sup < epsilon) {
        bool dup = false;
        for (const ShiftRecord& r : found)
          if (std::fabs(r.tau - c.tau) < 50 * dtau) dup = true;
        if (!dup) found.push_back({c.tau, epsilon, strip, sup});
      }
    }
  }
  if (found.empty()) {
    std::ostringstream os;
    os << "no shift under epsilon " << epsilon << " within tau_max "
       << tau_max << "; best sampled sup " << best_sup;
    throw NoShiftFoundError(os.str());
  }
  std::sort(found.begin(), found.end(),
            [](const ShiftRecord& a, const ShiftRecord& b) {
              return a.tau < b.tau;
            });
  return found;
}

double verify_shift(const LFunctionSpec& spec, double t, const Rect& strip,
                    double tau, double epsilon, int grid_density,
                    const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t, kSeriesTCap);
  check_rect(strip);
  if (!(tau > 0)) throw DomainError("tau must be > 0");
  if (grid_density < 1) throw DomainError("grid_density must be >= 1");
  (void)epsilon;  // threshold is the caller's judgement; we report the sup
  FtScanFn ft = make_ft_scan(spec, t, strip.x_lo, -8);
  return grid_sup(ft.plan, strip, tau, 0.01 / grid_density,
                  0.25 / grid_density);
}

}  // namespace xideform
