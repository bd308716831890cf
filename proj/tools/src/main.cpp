#include "acceptance.hpp"
#include "io.hpp"

#include "xideform/mellin.hpp"
#include "xideform/xieval.hpp"

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

using namespace xideform;
using namespace xideform::cli;

namespace {

const char* error_name(const XideformError& e) {
  if (dynamic_cast<const PoleCrossingError*>(&e)) return "PoleCrossingError";
  if (dynamic_cast<const PoleProximityError*>(&e)) return "PoleProximityError";
  if (dynamic_cast<const BoundaryZeroError*>(&e)) return "BoundaryZeroError";
  if (dynamic_cast<const WitnessNotFoundError*>(&e))
    return "WitnessNotFoundError";
  if (dynamic_cast<const NoShiftFoundError*>(&e)) return "NoShiftFoundError";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
  if (dynamic_cast<const MarginError*>(&e)) return "MarginError";
  if (dynamic_cast<const PrecisionError*>(&e)) return "PrecisionError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const ModeError*>(&e)) return "ModeError";
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  return "XideformError";
}

struct CommonOpts {
  std::string spec_name = "zeta";
  double t = -1;
  int digits = 34;
  double target = 1e-12;

  LFunctionSpec spec() const { return spec_from_name_or_file(spec_name); }
  PrecisionConfig prec() const {
    PrecisionConfig p;
    p.working_digits = digits;
    p.target_abs_err = Real(fmt_d(target));
    return p;
  }
  CacheKey key(const std::string& kind, const LFunctionSpec& s,
               const Rect& region) const {
    return {kind, spec_hash(s), t, region, digits, fmt_d(target)};
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_t = true) {
  cmd->add_option("--spec", opts.spec_name,
                  "preset name (zeta, chi4) or JSON config path");
  if (with_t) cmd->add_option("--t", opts.t, "deformation parameter, t < 0");
  cmd->add_option("--digits", opts.digits, "working decimal digits");
  cmd->add_option("--target", opts.target, "absolute error target");
}

std::string cx_str(const CxR& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v.re
     << (v.im < 0 ? " - " : " + ") << fabs(v.im) << "i";
  return os.str();
}

int cmd_eval(const CommonOpts& opts, const std::string& what,
             const std::string& s_text, long n, const std::string& route) {
  LFunctionSpec spec = opts.spec();
  PrecisionConfig prec = opts.prec();
  CxD sd = parse_cx(s_text);
  CxR s = to_cxr(sd);
  auto print = [&](const char* label, const ValueWithError& v) {
    std::cout << label << " = " << cx_str(v.value, opts.digits)
              << "\n  err <= " << std::setprecision(3) << v.err
              << "\n  digits " << opts.digits << "\n";
  };
  if (what == "f") print("F(s)", f_eval(spec, s, prec));
  else if (what == "xif") print("xi(s)", xi_F_eval(spec, s, prec));
  else if (what == "ft") print("F_t(s)", f_t_eval(spec, opts.t, s, prec));
  else if (what == "jmap")
    std::cout << "J_t(s) = " << cx_str(j_map(spec, opts.t, s), opts.digits)
              << "\n";
  else if (what == "gamma") print("gamma(s)", gamma_factor(spec, s, prec));
  else if (what == "gammat")
    print("gamma_t(s)", gamma_t(spec, opts.t, s, prec));
  else if (what == "phif") print("Phi_F(u)", phi_F(spec, s.re, prec));
  else if (what == "psi") {
    MellinKernel kernel = kernel_from_gamma(spec.gamma);
    if (kernel.mode == MellinKernel::Mode::ClosedForm)
      std::cout << "psi(v) = " << cx_str(psi_closed(kernel, s.re), opts.digits)
                << "  (closed form)\n";
    else
      print("psi(v)", psi_quad(kernel, s.re, prec));
  } else if (what == "btn")
    print("B_{t,n}(s)", b_tn(spec, opts.t, n, s, prec));
  else if (what == "residual")
    std::cout << "|xi_t(J_t(s))/gamma_t(s) - F_t(s)| = "
              << std::setprecision(6)
              << deformed_series_residual(spec, opts.t, s, prec) << "\n";
  else if (what == "xit") {
    if (route == "both") {
      ValueWithError f = xi_t_fourier(spec, opts.t, s, prec);
      ValueWithError c = xi_t_contour(spec, opts.t, s, prec);
      print("xi_t(s) [fourier]", f);
      print("xi_t(s) [contour]", c);
      Real gap = abs(f.value - c.value);
      std::cout << "  |gap| = " << std::setprecision(3) << gap
                << (gap <= f.err + c.err ? "  (within combined err)"
                                         : "  (OUTSIDE combined err)")
                << "\n";
    } else {
      XiRoute r = route == "fourier"   ? XiRoute::Fourier
                  : route == "contour" ? XiRoute::Contour
                                       : XiRoute::Auto;
      print("xi_t(s)", xi_t_eval(spec, opts.t, s, prec, r));
      std::cout << "  route " << route << "\n";
    }
  } else
    throw ConfigError("unknown --what: " + what);
  return 0;
}

std::vector<ZeroRecord> series_region_zeros(const LFunctionSpec& spec,
                                            const CommonOpts& opts,
                                            const Rect& region, bool no_cache) {
  CacheKey key = opts.key("ft_zeros", spec, region);
  std::vector<ZeroRecord> zeros;
  if (!no_cache && cache_load(key, &zeros)) return zeros;
  FtScanFn ft = make_ft_scan(spec, opts.t, region.x_lo - 0.01, -12);
  double floor = ft.plan.tail * 30 + 1e-10;
  zeros = locate_zeros(ft, region, floor, 1e-10, opts.prec());
  if (!no_cache) cache_store(key, zeros);
  return zeros;
}

int cmd_zeros(const CommonOpts& opts, const std::string& strip_text,
              double y_lo, double y_hi, const std::string& what,
              const std::string& out, bool no_cache) {
  LFunctionSpec spec = opts.spec();
  auto [x_lo, x_hi] = parse_range(strip_text);
  Rect region{x_lo, x_hi, y_lo, y_hi};
  std::vector<ZeroRecord> zeros;
  if (what == "series" || what == "both") {
    std::vector<ZeroRecord> sz =
        series_region_zeros(spec, opts, region, no_cache);
    zeros.insert(zeros.end(), sz.begin(), sz.end());
  }
  if (what == "xi" || what == "both") {
    PrecisionConfig prec = opts.prec();
    std::vector<PairedZero> pairs = pair_zeros(spec, opts.t, region, prec);
    PrecisionConfig prec_h = prec;
    prec_h.working_digits = std::min(prec.working_digits, 20);
    prec_h.target_abs_err = Real("1e-6");
    for (const PairedZero& p : pairs) {
      if (!p.matched) continue;
      ZeroRecord rec;
      rec.center = p.xi_zero_preimage;
      rec.residual = static_cast<double>(abs(
          xi_t_over_gamma(spec, opts.t, to_cxr(p.xi_zero_preimage), prec_h)
              .value));
      rec.method = "newton";
      rec.converged = true;
      zeros.push_back(rec);
    }
  }
  atomic_write(out, zeros_csv(zeros));
  std::cout << out << ": " << zeros.size() << " zeros\n";
  return 0;
}

int cmd_correspond(const CommonOpts& opts, const std::string& strip_text,
                   double y_lo, double y_hi, const std::string& out) {
  LFunctionSpec spec = opts.spec();
  auto [x_lo, x_hi] = parse_range(strip_text);
  std::vector<PairedZero> pairs =
      pair_zeros(spec, opts.t, Rect{x_lo, x_hi, y_lo, y_hi}, opts.prec());
  atomic_write(out, pairs_csv(pairs));
  int matched = 0;
  for (const PairedZero& p : pairs) matched += p.matched;
  std::cout << out << ": " << pairs.size() << " series zeros, " << matched
            << " matched\n";
  return 0;
}

int cmd_witness(const CommonOpts& opts, const std::string& out) {
  LFunctionSpec spec = opts.spec();
  PrecisionConfig prec = opts.prec();
  CertifiedZero cert = newman_witness(spec, opts.t, prec);
  atomic_write(out, certificate_json(spec, opts.t, cert, prec));
  std::cout << "certified zero of the deformed completed function:\n"
            << "  image disk center " << fmt_d(cert.disk_center.re) << " + "
            << fmt_d(cert.disk_center.im) << "i, radius "
            << fmt_d(cert.disk_radius) << "\n  series zero "
            << fmt_d(cert.series_zero.re) << " + "
            << fmt_d(cert.series_zero.im) << "i, circle radius "
            << fmt_d(cert.circle_radius) << "\n  min |F_t| on circle "
            << fmt_d(cert.delta) << ", sup residual "
            << fmt_d(cert.sup_residual) << "\n  distance right of the "
            << "critical line: " << fmt_d(cert.disk_center.re - 0.5)
            << " (disk radius " << fmt_d(cert.disk_radius) << ")\n  -> "
            << out << "\n";
  return 0;
}

int cmd_figure(const CommonOpts& opts, const std::string& strip_text,
               double y_lo, double y_hi, const std::string& out_base) {
  LFunctionSpec spec = opts.spec();
  auto [x_lo, x_hi] = parse_range(strip_text);
  std::vector<PairedZero> pairs = write_figure(
      spec, opts.t, Rect{x_lo, x_hi, y_lo, y_hi}, out_base, opts.prec());
  std::cout << out_base << ".svg / .csv: " << pairs.size()
            << " series zeros\n";
  return 0;
}

int cmd_verify(const std::vector<int>& only) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int k = 1; k <= kCriterionCount; ++k) ids.push_back(k);
  bool all = true;
  for (int id : ids) {
    CriterionResult r = run_criterion(id);
    std::cout << format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed completed L-functions: evaluation, zeros, "
               "certification"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string what = "xit", s_text = "0.5+20i", route = "auto";
  std::string strip_text = "-0.3:-0.2", out, zwhat = "series";
  double y_lo = 0, y_hi = 100;
  long n = 1;
  bool no_cache = false;
  std::vector<int> only;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity");
  add_common(eval, opts);
  eval->add_option("--what", what,
                   "f | xif | ft | xit | jmap | gamma | gammat | phif | psi "
                   "| btn | residual");
  eval->add_option("--s", s_text, "point, e.g. -0.25+40i (u or v for "
                                  "phif/psi)");
  eval->add_option("--n", n, "coefficient index for btn");
  eval->add_option("--route", route, "auto | fourier | contour | both");

  CLI::App* zeros = app.add_subcommand("zeros", "zero CSV for a region");
  add_common(zeros, opts);
  zeros->add_option("--strip", strip_text, "real-part range lo:hi");
  zeros->add_option("--ymin", y_lo);
  zeros->add_option("--ymax", y_hi);
  zeros->add_option("--what", zwhat, "series | xi | both");
  zeros->add_option("--out", out);
  zeros->add_flag("--no-cache", no_cache);

  CLI::App* correspond =
      app.add_subcommand("correspond", "pairing table with distances");
  add_common(correspond, opts);
  correspond->add_option("--strip", strip_text, "real-part range lo:hi");
  correspond->add_option("--ymin", y_lo);
  correspond->add_option("--ymax", y_hi);
  correspond->add_option("--out", out);

  CLI::App* witness =
      app.add_subcommand("witness", "certified off-critical-line zero");
  add_common(witness, opts);
  witness->add_option("--out", out);

  CLI::App* figure =
      app.add_subcommand("figure", "two-panel zero scatter (SVG + CSV)");
  add_common(figure, opts);
  figure->add_option("--strip", strip_text, "real-part range lo:hi");
  figure->add_option("--ymin", y_lo);
  figure->add_option("--ymax", y_hi);
  figure->add_option("--out", out);

  CLI::App* verify = app.add_subcommand("verify", "run acceptance checks");
  verify->add_option("--only", only, "criterion numbers (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(opts, what, s_text, n, route);
    if (zeros->parsed()) {
      if (y_lo == 0 && zwhat != "series")
        y_lo = 10;  // xi-side machinery needs clearance from the pole region
      return cmd_zeros(opts, strip_text, y_lo, y_hi, zwhat,
                       out.empty() ? "zeros.csv" : out, no_cache);
    }
    if (correspond->parsed())
      return cmd_correspond(opts, strip_text, y_lo == 0 ? 10 : y_lo, y_hi,
                            out.empty() ? "pairs.csv" : out);
    if (witness->parsed())
      return cmd_witness(opts, out.empty() ? "certificate.json" : out);
    if (figure->parsed())
      return cmd_figure(opts, strip_text, y_lo == 0 ? 30 : y_lo, y_hi,
                        out.empty() ? "figure" : out);
    if (verify->parsed()) return cmd_verify(only);
  } catch (const WitnessNotFoundError& e) {
    std::cerr << "WitnessNotFoundError: " << e.what() << "\n";
    return 4;
  } catch (const XideformError& e) {
    std::cerr << error_name(e) << ": " << e.what() << "\n";
    return 3;
  }
  return 2;
}
