#include "xideform/zerofind.hpp"

#include "xideform/almostperiod.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xideform {

void check_rect(const Rect& r) {
  if (!(r.x_lo < r.x_hi) || !(r.y_lo < r.y_hi))
    throw DomainError("degenerate rectangle");
}

FtScanFn make_ft_scan(const LFunctionSpec& spec, double t, double x_min,
                      double target_log10) {
  return {detail::make_ft_plan(spec, t, x_min, target_log10, 5000000)};
}

namespace {

// Signals "sample too close to a zero" up to the jitter loop.
struct BoundarySample {};

double angle_step(const CxD& fa, const CxD& fb) {
  double d = std::atan2(fb.im, fb.re) - std::atan2(fa.im, fa.re);
  if (d > 3.14159265358979323846) d -= 2 * 3.14159265358979323846;
  if (d <= -3.14159265358979323846) d += 2 * 3.14159265358979323846;
  return d;
}

struct EdgeWalker {
  const AnalyticFn& f;
  double floor;
  long budget;

  CxD eval(const CxD& z) {
    if (--budget < 0)
      throw PrecisionError("boundary sampling budget exceeded");
    CxD v = f(z);
    if (std::hypot(v.re, v.im) <= floor) throw BoundarySample{};
    return v;
  }

  double wind(const CxD& a, const CxD& fa, const CxD& b, const CxD& fb,
              int depth) {
    if (depth > 48)
      throw PrecisionError("phase changes too fast on the boundary");
    const double pi = 3.14159265358979323846;
    double d = angle_step(fa, fb);
    CxD m{(a.re + b.re) / 2, (a.im + b.im) / 2};
    // A principal-value step can hide full turns, so a segment is only
    // accepted when it is short, its step is small, and the midpoint agrees
    // with the endpoints.
    if (std::fabs(d) < pi / 2 && depth >= 2 &&
        std::hypot(b.re - a.re, b.im - a.im) <= 0.5) {
      CxD fm = eval(m);
      double d1 = angle_step(fa, fm), d2 = angle_step(fm, fb);
      if (std::fabs(d1) < pi / 2 && std::fabs(d2) < pi / 2 &&
          std::fabs(d1 + d2 - d) < 1e-9)
        return d1 + d2;
      return wind(a, fa, m, fm, depth + 1) + wind(m, fm, b, fb, depth + 1);
    }
    CxD fm = eval(m);
    return wind(a, fa, m, fm, depth + 1) + wind(m, fm, b, fb, depth + 1);
  }
};

long count_on(const AnalyticFn& f, const Rect& r, double floor, long budget) {
  EdgeWalker w{f, floor, budget};
  CxD corners[5] = {{r.x_lo, r.y_lo}, {r.x_hi, r.y_lo}, {r.x_hi, r.y_hi},
                    {r.x_lo, r.y_hi}, {r.x_lo, r.y_lo}};
  CxD fc[5];
  for (int i = 0; i < 5; ++i) fc[i] = i == 4 ? fc[0] : w.eval(corners[i]);
  double total = 0;
  for (int i = 0; i < 4; ++i)
    total += w.wind(corners[i], fc[i], corners[i + 1], fc[i + 1], 0);
  double turns = total / (2 * 3.14159265358979323846);
  long n = std::lround(turns);
  if (std::fabs(turns - n) > 0.25)
    throw PrecisionError("winding total is not near an integer");
  return n;
}

}  // namespace

long count_zeros(const AnalyticFn& f, const Rect& rect, double err_floor,
                 const PrecisionConfig& prec) {
  check_rect(rect);
  // Zeros sitting on the test boundary are nuisances: nudge all edges
  // outward/inward a little and retry before giving up.
  const double off[6] = {0, 1e-3, -1e-3, 2e-3, -2e-3, 3e-3};
  for (int k = 0; k < 6; ++k) {
    Rect r{rect.x_lo - off[k], rect.x_hi + off[k], rect.y_lo - off[k],
           rect.y_hi + off[k]};
    if (!(r.x_lo < r.x_hi) || !(r.y_lo < r.y_hi)) continue;
    try {
      return count_on(f, r, err_floor, 4 * prec.max_terms);
    } catch (const BoundarySample&) {
      continue;
    }
  }
  throw BoundaryZeroError("a zero stayed on the rectangle boundary through "
                          "all jitter attempts");
}

namespace {

ZeroRecord newton_polish(const AnalyticFn& f, CxD z, double tol,
                         int max_steps) {
  ZeroRecord rec;
  rec.method = "newton";
  CxD fz = f(z);
  for (int k = 0; k < max_steps; ++k) {
    double mag = std::hypot(fz.re, fz.im);
    if (mag <= tol) {
      rec.center = z;
      rec.residual = mag;
      rec.newton_steps = k;
      rec.converged = true;
      return rec;
    }
    double h = std::max(1e-7, 1e-9 * std::hypot(z.re, z.im));
    CxD fp = (f(CxD{z.re + h, z.im}) - f(CxD{z.re - h, z.im})) / (2 * h);
    if (std::hypot(fp.re, fp.im) == 0) break;
    CxD step = fz / fp;
    if (std::hypot(step.re, step.im) > 1) break;
    z -= step;
    fz = f(z);
    rec.newton_steps = k + 1;
  }
  rec.center = z;
  rec.residual = std::hypot(fz.re, fz.im);
  return rec;
}

bool inside(const Rect& r, const CxD& z, double slack) {
  return z.re >= r.x_lo - slack && z.re <= r.x_hi + slack &&
         z.im >= r.y_lo - slack && z.im <= r.y_hi + slack;
}

}  // namespace

std::vector<ZeroRecord> locate_zeros(const AnalyticFn& f, const Rect& rect,
                                     double err_floor, double tol,
                                     const PrecisionConfig& prec) {
  std::vector<ZeroRecord> out;
  std::function<void(Rect, long, int)> descend = [&](Rect r, long known,
                                                     int depth) {
    long c = known >= 0 ? known : count_zeros(f, r, err_floor, prec);
    if (c == 0) return;
    double w = r.x_hi - r.x_lo, hgt = r.y_hi - r.y_lo;
    if (c == 1 && w < 0.2 && hgt < 0.2) {
      ZeroRecord rec =
          newton_polish(f, CxD{(r.x_lo + r.x_hi) / 2, (r.y_lo + r.y_hi) / 2},
                        tol, prec.max_refine);
      if (rec.converged && inside(r, rec.center, 1e-6)) {
        out.push_back(rec);
        return;
      }
    }
    if (depth > 60 || (w < 1e-9 && hgt < 1e-9)) {
      // Cell exhausted without convergence; report the center honestly.
      ZeroRecord rec;
      rec.method = "cell";
      rec.center = {(r.x_lo + r.x_hi) / 2, (r.y_lo + r.y_hi) / 2};
      rec.residual = std::hypot(f(rec.center).re, f(rec.center).im);
      out.push_back(rec);
      return;
    }
    // Split the longer side; quadrisection when the cell is still squarish.
    std::vector<Rect> parts;
    double xm = (r.x_lo + r.x_hi) / 2, ym = (r.y_lo + r.y_hi) / 2;
    if (w > 0.05 && hgt > 0.05 && w < 4 * hgt && hgt < 4 * w) {
      parts = {{r.x_lo, xm, r.y_lo, ym}, {xm, r.x_hi, r.y_lo, ym},
               {r.x_lo, xm, ym, r.y_hi}, {xm, r.x_hi, ym, r.y_hi}};
    } else if (hgt >= w) {
      parts = {{r.x_lo, r.x_hi, r.y_lo, ym}, {r.x_lo, r.x_hi, ym, r.y_hi}};
    } else {
      parts = {{r.x_lo, xm, r.y_lo, r.y_hi}, {xm, r.x_hi, r.y_lo, r.y_hi}};
    }
    long seen = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (seen == c) break;  // nothing left for the remaining parts
      long ci = count_zeros(f, parts[i], err_floor, prec);
      seen += ci;
      if (ci > 0) descend(parts[i], ci, depth + 1);
    }
  };
  descend(rect, -1, 0);
  std::sort(out.begin(), out.end(), [](const ZeroRecord& a,
                                       const ZeroRecord& b) {
    return a.center.im < b.center.im ||
           (a.center.im == b.center.im && a.center.re < b.center.re);
  });
  return out;
}

namespace {

// Two-tier series zero location: coarse plan for the counting walks, tight
// plan for the final Newton polish and residual.
std::vector<ZeroRecord> series_zeros(const LFunctionSpec& spec, double t,
                                     const Rect& rect,
                                     const PrecisionConfig& prec) {
  FtScanFn coarse = make_ft_scan(spec, t, rect.x_lo - 0.01, -8);
  double floor = coarse.plan.tail * 30 + 1e-7;
  std::vector<ZeroRecord> rough =
      locate_zeros(coarse, rect, floor, 1e-6, prec);
  FtScanFn fine = make_ft_scan(spec, t, rect.x_lo - 0.01, -12);
  for (ZeroRecord& rec : rough) {
    ZeroRecord polished =
        newton_polish(fine, rec.center, 1e-11, prec.max_refine);
    if (polished.converged &&
        std::hypot(polished.center.re - rec.center.re,
                   polished.center.im - rec.center.im) < 1e-3) {
      polished.newton_steps += rec.newton_steps;
      polished.method = rec.method;
      rec = polished;
    } else {
      rec.residual = std::hypot(fine(rec.center).re, fine(rec.center).im);
    }
  }
  return rough;
}

double mag(const CxD& z) { return std::hypot(z.re, z.im); }

}  // namespace

CertifiedZero rouche_certify(const LFunctionSpec& spec, double t,
                             const ZeroRecord& rho, double radius,
                             const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  if (!(radius > 0)) throw DomainError("certification radius must be > 0");
  if (rho.center.im < kJComposedYMin)
    throw PoleProximityError(
        "certification needs Im s >= 10 to stay clear of the pole region");
  double r = radius;
  FtScanFn ft = make_ft_scan(spec, t, rho.center.re - radius - 0.05, -12);
  double floor = ft.plan.tail * 30 + 1e-10;
  for (int tries = 0;; ++tries) {
    Rect box{rho.center.re - r, rho.center.re + r, rho.center.im - r,
             rho.center.im + r};
    long c = count_zeros(ft, box, floor, prec);
    if (c == 1) break;
    if (c == 0) throw DomainError("no series zero inside the given circle");
    r *= 0.5;
    if (tries >= 4)
      throw MarginError("could not isolate the zero from its neighbours");
  }
  PrecisionConfig prec_h = prec;
  prec_h.working_digits = std::min(prec.working_digits, 20);
  prec_h.target_abs_err = Real("1e-6");

  const double two_pi = 2 * 3.14159265358979323846;
  auto at_angle = [&](double th) {
    return CxD{rho.center.re + r * std::cos(th),
               rho.center.im + r * std::sin(th)};
  };

  // delta needs only the cheap series evaluator; sample it densely.
  const int mf = 1024;
  double min_f = 1e300, slope_f = 0;
  {
    std::vector<CxD> fv(mf);
    for (int k = 0; k < mf; ++k) fv[k] = ft(at_angle(two_pi * k / mf));
    double chord = 2 * r * std::sin(two_pi / (2 * mf));
    for (int k = 0; k < mf; ++k) {
      min_f = std::min(min_f, mag(fv[k]));
      slope_f = std::max(slope_f, mag(fv[(k + 1) % mf] - fv[k]) / chord);
    }
  }
  double delta =
      min_f - 1.5 * (two_pi * r / mf / 2) * slope_f - ft.plan.tail;

  // The residual h - F_t is smooth and slowly varying on the circle, so the
  // expensive samples stay sparse, doubled until the padded sup settles.
  int m = 32;
  std::vector<CxD> dv;
  std::vector<double> herr;
  auto fill = [&](int m_new) {
    std::vector<CxD> d2(m_new);
    std::vector<double> e2(m_new);
    for (int k = 0; k < m_new; ++k) {
      if (!dv.empty() && k % 2 == 0) {
        d2[k] = dv[k / 2];
        e2[k] = herr[k / 2];
        continue;
      }
      CxD z = at_angle(two_pi * k / m_new);
      ValueWithError h = xi_t_over_gamma(spec, t, to_cxr(z), prec_h);
      d2[k] = to_cxd(h.value) - ft(z);
      e2[k] = static_cast<double>(h.err);
    }
    dv = std::move(d2);
    herr = std::move(e2);
  };

  double sup = 0, prev_sup = -1;
  while (true) {
    fill(m);
    double max_d = 0, max_he = 0, slope_d = 0;
    double chord = 2 * r * std::sin(two_pi / (2 * m));
    for (int k = 0; k < m; ++k) {
      max_d = std::max(max_d, mag(dv[k]));
      max_he = std::max(max_he, herr[k]);
      slope_d = std::max(slope_d, mag(dv[(k + 1) % m] - dv[k]) / chord);
    }
    // Sampled extrema padded into bounds by the arc between samples times a
    // sampled derivative bound (with headroom for its own sampling error).
    double arc = two_pi * r / m / 2;
    sup = max_d + 1.5 * arc * slope_d + max_he + ft.plan.tail;
    bool stable =
        prev_sup > 0 && std::fabs(sup - prev_sup) <= 0.02 * std::max(sup, 1e-12);
    if (stable || m >= 512) break;
    prev_sup = sup;
    m *= 2;
  }
  if (!(delta > 0) || !(sup < 0.9 * delta)) {
    std::ostringstream os;
    os << "margin failed: sup " << sup << " vs 0.9 * delta " << 0.9 * delta
       << " at radius " << r;
    throw MarginError(os.str());
  }
  // Image disk: center at the map image, radius from a sampled sup of the
  // map derivative 1 + (|t|/2) sum omega_i / s over the circle.
  double at = std::fabs(t);
  double sup_jp = 0;
  for (int k = 0; k < m; ++k) {
    double th = two_pi * k / m;
    CxD z{rho.center.re + r * std::cos(th), rho.center.im + r * std::sin(th)};
    CxD jp{1, 0};
    for (const GammaFactorTerm& fterm : spec.gamma.factors) {
      double omega = static_cast<double>(fterm.omega);
      jp += CxD{at / 2 * omega, 0} / z;
    }
    sup_jp = std::max(sup_jp, mag(jp));
  }
  CertifiedZero cert;
  cert.disk_center = to_cxd(j_map(spec, t, to_cxr(rho.center)));
  cert.disk_radius = r * sup_jp * 1.02;
  cert.delta = delta;
  cert.sup_residual = sup;
  cert.claim = "xi_t has >= 1 zero in the image disk";
  cert.series_zero = rho.center;
  cert.circle_radius = r;
  return cert;
}

std::vector<PairedZero> pair_zeros(const LFunctionSpec& spec, double t,
                                   const Rect& strip,
                                   const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  check_rect(strip);
  if (strip.y_lo < kJComposedYMin)
    throw DomainError("pairing strip must start at Im s >= 10");
  std::vector<ZeroRecord> zeros = series_zeros(spec, t, strip, prec);
  PrecisionConfig prec_h = prec;
  prec_h.working_digits = std::min(prec.working_digits, 20);
  prec_h.target_abs_err = Real("1e-8");
  AnalyticFn h = [&](const CxD& z) {
    return to_cxd(xi_t_over_gamma(spec, t, to_cxr(z), prec_h).value);
  };
  std::vector<PairedZero> out;
  for (const ZeroRecord& rec : zeros) {
    PairedZero p;
    p.series_zero = rec;
    ZeroRecord hz = newton_polish(h, rec.center, 1e-5, 16);
    double d = std::hypot(hz.center.re - rec.center.re,
                          hz.center.im - rec.center.im);
    if (hz.converged && d < 0.05) {
      p.xi_zero_preimage = hz.center;
      p.distance = d;
      p.matched = true;
    }
    out.push_back(p);
  }
  // Nearest-neighbour sanity: two series zeros claiming the same image zero
  // keep only the closer claim (ties by smaller Im gap).
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!out[i].matched || !out[j].matched) continue;
      if (mag(out[i].xi_zero_preimage - out[j].xi_zero_preimage) > 1e-4)
        continue;
      std::size_t drop =
          out[i].distance < out[j].distance ||
                  (out[i].distance == out[j].distance &&
                   std::fabs(out[i].xi_zero_preimage.im -
                             out[i].series_zero.center.im) <=
                       std::fabs(out[j].xi_zero_preimage.im -
                                 out[j].series_zero.center.im))
              ? j
              : i;
      out[drop].matched = false;
      out[drop].distance = 0;
      out[drop].xi_zero_preimage = {};
    }
  return out;
}

CertifiedZero newman_witness(const LFunctionSpec& spec, double t,
                             const PrecisionConfig& prec) {
  check_precision_config(prec);
  check_deform_t(t);
  const double r0 = 0.02;
  const double window_h = 24;
  for (int widen = 0; widen < 3; ++widen) {
    double x_lo = -0.3 - 0.15 * widen;
    double x_hi = -0.2;
    // First height where the image disk can clear the critical line.
    double y0 = 20;
    while (y0 < 5000) {
      CxR j = j_map(spec, t, CxR{Real(x_hi), Real(y0)});
      if (static_cast<double>(j.re) - 0.5 > 2.5 * r0 * 1.1) break;
      y0 += 5;
    }
    double tau_step = 0;
    for (int win = 0; win < 8; ++win) {
      Rect window{x_lo, x_hi, y0, y0 + window_h};
      std::vector<ZeroRecord> zeros = series_zeros(spec, t, window, prec);
      for (const ZeroRecord& rec : zeros) {
        if (!rec.converged) continue;
        // Skip zeros whose image cannot clear the line even at the small
        // radius; certification is expensive.
        CxD jz = to_cxd(j_map(spec, t, to_cxr(rec.center)));
        if (jz.re - 0.5 < 2.1 * r0) continue;
        for (double r : {r0, 2 * r0}) {
          try {
            CertifiedZero cert = rouche_certify(spec, t, rec, r, prec);
            if (cert.disk_center.re - 0.5 >= 2 * cert.disk_radius)
              return cert;
            break;  // certified but not off-line enough: go higher, not wider
          } catch (const MarginError&) {
            continue;  // grow the circle once, then give up on this zero
          } catch (const PoleProximityError&) {
            break;
          }
        }
      }
      // Climb: prefer a genuine almost-period at least a window tall, so the
      // zero pattern above is a near-copy of what we already scanned;
      // shifts that small are rarely available, so normally just move up a
      // window.
      if (tau_step == 0) {
        tau_step = window_h;
        try {
          std::vector<ShiftRecord> shifts = find_shifts(
              spec, t, Rect{x_lo, x_hi, y0, y0 + window_h}, 0.25, 1e4, 1,
              prec);
          for (const ShiftRecord& s : shifts)
            if (s.tau >= window_h) {
              tau_step = s.tau;
              break;
            }
        } catch (const XideformError&) {
        }
      }
      y0 += tau_step;
    }
  }
  throw WitnessNotFoundError(
      "no certifiable off-line zero within the search budget");
}

}  // namespace xideform
