#include "xideform/selberg.hpp"

#include "xideform/detail/gammafactor.hpp"
#include "xideform/zetafn.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace xideform {

namespace {

using nlohmann::json;

std::string real_to_string(const Real& r) {
  std::string s = r.str(40);
  return s;
}

Real real_from_json(const json& j) {
  if (j.is_string()) return Real(j.get<std::string>());
  return Real(j.get<double>());
}

CxR cx_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ConfigError("complex value must be [re, im]");
    return {real_from_json(j[0]), real_from_json(j[1])};
  }
  return {real_from_json(j), Real(0)};
}

json cx_to_json(const CxR& z) {
  return json::array({real_to_string(z.re), real_to_string(z.im)});
}

const char* variant_name(CoeffVariant v) {
  switch (v) {
    case CoeffVariant::AllOnes: return "AllOnes";
    case CoeffVariant::PeriodicList: return "PeriodicList";
    case CoeffVariant::ExplicitList: return "ExplicitList";
  }
  return "?";
}

const char* family_name(AnalyticFamily f) {
  switch (f) {
    case AnalyticFamily::ZetaLike: return "ZetaLike";
    case AnalyticFamily::DirichletLLike: return "DirichletLLike";
    case AnalyticFamily::SeriesOnly: return "SeriesOnly";
  }
  return "?";
}

CoeffVariant variant_from_name(const std::string& s) {
  if (s == "AllOnes") return CoeffVariant::AllOnes;
  if (s == "PeriodicList") return CoeffVariant::PeriodicList;
  if (s == "ExplicitList") return CoeffVariant::ExplicitList;
  throw ConfigError("unknown coefficient variant: " + s);
}

AnalyticFamily family_from_name(const std::string& s) {
  if (s == "ZetaLike") return AnalyticFamily::ZetaLike;
  if (s == "DirichletLLike") return AnalyticFamily::DirichletLLike;
  if (s == "SeriesOnly") return AnalyticFamily::SeriesOnly;
  throw ConfigError("unknown analytic family: " + s);
}

}  // namespace

void validate_spec(const LFunctionSpec& spec) {
  const CoeffRule& c = spec.coeffs;
  if (!(c.bound_const > 0)) throw DomainError("coeff bound_const must be > 0");
  switch (c.variant) {
    case CoeffVariant::AllOnes:
      break;
    case CoeffVariant::PeriodicList:
      if (c.period < 1 || static_cast<int>(c.values.size()) != c.period)
        throw DomainError("PeriodicList needs period == values.size() >= 1");
      break;
    case CoeffVariant::ExplicitList:
      if (c.values.empty()) throw DomainError("ExplicitList needs values");
      break;
  }
  bool any_nonzero = (c.variant == CoeffVariant::AllOnes);
  for (const CxR& v : c.values)
    if (!(v == CxR{})) any_nonzero = true;
  if (!any_nonzero) throw DomainError("series is identically zero");
  for (long n = 1; n <= 10000; ++n) {
    Real bound = c.bound_const * Real(n) * Real(n);
    if (abs(coeff(spec, n)) > bound * Real("1.0000000001"))
      throw DomainError("declared coefficient bound violated at n = " +
                        std::to_string(n));
  }
  const GammaData& g = spec.gamma;
  if (g.alpha == CxR{}) throw DomainError("alpha must be nonzero");
  if (!(g.bigQ > 0)) throw DomainError("Q must be positive");
  if (g.pole_order_m < 0) throw DomainError("pole order must be >= 0");
  for (const GammaFactorTerm& f : g.factors) {
    if (!(f.omega > 0)) throw DomainError("every omega must be positive");
    if (f.mu.re < 0) throw DomainError("every Re mu must be >= 0");
  }
}

LFunctionSpec preset_zeta() {
  LFunctionSpec spec;
  spec.name = "zeta";
  spec.coeffs.variant = CoeffVariant::AllOnes;
  spec.coeffs.bound_const = 1;
  spec.gamma.alpha = CxR{Real(1) / 2, Real(0)};
  spec.gamma.bigQ = 1 / sqrt(const_pi<Real>());
  spec.gamma.pole_order_m = 1;
  spec.gamma.factors = {{Real(1) / 2, CxR{}}};
  spec.family = AnalyticFamily::ZetaLike;
  return spec;
}

LFunctionSpec preset_chi4() {
  LFunctionSpec spec;
  spec.name = "chi4";
  spec.coeffs.variant = CoeffVariant::PeriodicList;
  spec.coeffs.period = 4;
  spec.coeffs.values = {CxR{Real(1), Real(0)}, CxR{}, CxR{Real(-1), Real(0)},
                        CxR{}};
  spec.coeffs.bound_const = 1;
  spec.gamma.alpha = CxR{Real(1), Real(0)};
  spec.gamma.bigQ = 2 / sqrt(const_pi<Real>());
  spec.gamma.pole_order_m = 0;
  spec.gamma.factors = {{Real(1) / 2, CxR{Real(1) / 2, Real(0)}}};
  spec.family = AnalyticFamily::DirichletLLike;
  return spec;
}

LFunctionSpec spec_from_json_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("spec config parse failure: ") + e.what());
  }
  LFunctionSpec spec;
  try {
    spec.name = j.at("name").get<std::string>();
    const json& jc = j.at("coeffs");
    spec.coeffs.variant = variant_from_name(jc.at("variant"));
    if (jc.contains("values"))
      for (const json& v : jc.at("values"))
        spec.coeffs.values.push_back(cx_from_json(v));
    if (jc.contains("period")) spec.coeffs.period = jc.at("period").get<int>();
    if (jc.contains("bound_const"))
      spec.coeffs.bound_const = real_from_json(jc.at("bound_const"));
    const json& jg = j.at("gamma");
    spec.gamma.alpha = cx_from_json(jg.at("alpha"));
    spec.gamma.bigQ = real_from_json(jg.at("Q"));
    spec.gamma.pole_order_m = jg.at("m").get<int>();
    for (const json& f : jg.at("factors")) {
      if (!f.is_array() || f.size() != 3)
        throw ConfigError("gamma factor must be [omega, mu_re, mu_im]");
      spec.gamma.factors.push_back(
          {real_from_json(f[0]), CxR{real_from_json(f[1]), real_from_json(f[2])}});
    }
    spec.family = family_from_name(j.at("family"));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("spec config field error: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

std::string spec_to_json_text(const LFunctionSpec& spec) {
  json j;
  j["name"] = spec.name;
  json jc;
  jc["variant"] = variant_name(spec.coeffs.variant);
  if (!spec.coeffs.values.empty()) {
    json vals = json::array();
    for (const CxR& v : spec.coeffs.values) vals.push_back(cx_to_json(v));
    jc["values"] = vals;
  }
  if (spec.coeffs.period > 0) jc["period"] = spec.coeffs.period;
  jc["bound_const"] = real_to_string(spec.coeffs.bound_const);
  j["coeffs"] = jc;
  json jg;
  jg["alpha"] = cx_to_json(spec.gamma.alpha);
  jg["Q"] = real_to_string(spec.gamma.bigQ);
  jg["m"] = spec.gamma.pole_order_m;
  json factors = json::array();
  for (const GammaFactorTerm& f : spec.gamma.factors)
    factors.push_back(json::array({real_to_string(f.omega),
                                   real_to_string(f.mu.re),
                                   real_to_string(f.mu.im)}));
  jg["factors"] = factors;
  j["gamma"] = jg;
  j["family"] = family_name(spec.family);
  return j.dump(2);
}

LFunctionSpec spec_from_name_or_file(const std::string& name_or_path) {
  if (name_or_path == "zeta") return preset_zeta();
  if (name_or_path == "chi4") return preset_chi4();
  std::ifstream in(name_or_path);
  if (!in) throw ConfigError("cannot open spec config: " + name_or_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return spec_from_json_text(ss.str());
}

std::uint64_t spec_hash(const LFunctionSpec& spec) {
  std::string canon = spec_to_json_text(spec);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

CxR coeff(const LFunctionSpec& spec, long n) {
  if (n < 1) throw DomainError("coefficient index must be >= 1");
  switch (spec.coeffs.variant) {
    case CoeffVariant::AllOnes:
      return CxR{Real(1), Real(0)};
    case CoeffVariant::PeriodicList:
      return spec.coeffs.values[static_cast<std::size_t>((n - 1) %
                                                         spec.coeffs.period)];
    case CoeffVariant::ExplicitList:
      if (n <= static_cast<long>(spec.coeffs.values.size()))
        return spec.coeffs.values[static_cast<std::size_t>(n - 1)];
      return CxR{};
  }
  return CxR{};
}

CxD coeff_d(const LFunctionSpec& spec, long n) { return to_cxd(coeff(spec, n)); }

Real coeff_envelope(const LFunctionSpec& spec, long n) {
  switch (spec.coeffs.variant) {
    case CoeffVariant::AllOnes:
      return Real(1);
    case CoeffVariant::PeriodicList: {
      Real m = 0;
      for (const CxR& v : spec.coeffs.values) m = std::max(m, abs(v));
      return m;
    }
    case CoeffVariant::ExplicitList:
      if (n > static_cast<long>(spec.coeffs.values.size())) return Real(0);
      return abs(spec.coeffs.values[static_cast<std::size_t>(n - 1)]);
  }
  return spec.coeffs.bound_const * Real(n) * Real(n);
}

long coeff_support_end(const LFunctionSpec& spec) {
  if (spec.coeffs.variant == CoeffVariant::ExplicitList)
    return static_cast<long>(spec.coeffs.values.size());
  return 0;
}

namespace {

// Dirichlet-L continuation: F(s) = q^{-s} sum_r a_r zeta(s, r/q). The
// residue of the pole at s = 1 is q^{-1} sum_r a_r; when that vanishes the
// limit value is assembled from the pole-separated pieces.
ValueWithError dirichlet_eval(const LFunctionSpec& spec, const CxR& s,
                              const PrecisionConfig& prec) {
  int q = spec.coeffs.period;
  CxR coeff_sum{};
  for (const CxR& v : spec.coeffs.values) coeff_sum += v;
  bool has_pole = !(coeff_sum == CxR{});
  if (s == CxR{Real(1), Real(0)}) {
    if (has_pole) throw PoleError("pole at s = 1");
    CxR acc{};
    Real err = 0;
    for (int r = 1; r <= q; ++r) {
      CxR a = spec.coeffs.values[r - 1];
      if (a == CxR{}) continue;
      auto parts = detail::hurwitz_em_parts(s, Real(r) / q,
                                            prec.working_digits, prec.max_terms);
      // lim_{s->1} (N^{1-s} - 1)/(s - 1) = -log N with N = M + r/q.
      acc += a * (parts.regular - CxR{log(parts.big_n), Real(0)});
      err += abs(a) * parts.err;
    }
    return {acc / Real(q), err / q};
  }
  CxR qs = exp(-s * log(CxR{Real(q), Real(0)}));
  CxR acc{};
  Real err = 0;
  CxR pole_acc{};
  for (int r = 1; r <= q; ++r) {
    CxR a = spec.coeffs.values[r - 1];
    if (a == CxR{}) continue;
    auto parts = detail::hurwitz_em_parts(s, Real(r) / q, prec.working_digits,
                                          prec.max_terms);
    acc += a * parts.regular;
    pole_acc += a * parts.n_pow_1ms;
    err += abs(a) * parts.err;
  }
  acc += pole_acc / (s - Real(1));
  return {qs * acc, err * abs(qs)};
}

ValueWithError series_only_eval(const LFunctionSpec& spec, const CxR& s,
                                const PrecisionConfig& prec) {
  long support = coeff_support_end(spec);
  long n_cut;
  Real tail = 0;
  if (support > 0) {
    n_cut = support;
  } else {
    if (!(s.re > 3))
      throw DomainError(
          "SeriesOnly family has no continuation at Re s <= 3");
    // tail over n > N bounded by c N^{3-x} / (x - 3)
    Real c = spec.coeffs.bound_const;
    Real x = s.re;
    Real target = prec.target_abs_err / 2;
    n_cut = 10;
    while (true) {
      tail = c * pow(Real(n_cut), 3 - x) / (x - 3);
      if (tail <= target) break;
      n_cut *= 2;
      if (n_cut > prec.max_terms)
        throw PrecisionError("SeriesOnly truncation exceeds max_terms");
    }
  }
  CxR acc{};
  for (long n = 1; n <= n_cut; ++n) {
    CxR a = coeff(spec, n);
    if (a == CxR{}) continue;
    acc += a * exp(-s * log(CxR{Real(n), Real(0)}));
  }
  return {acc, tail};
}

}  // namespace

ValueWithError f_eval(const LFunctionSpec& spec, const CxR& s,
                      const PrecisionConfig& prec) {
  check_precision_config(prec);
  switch (spec.family) {
    case AnalyticFamily::ZetaLike: {
      if (spec.coeffs.variant != CoeffVariant::AllOnes)
        throw DomainError("ZetaLike family requires all-ones coefficients");
      if (s == CxR{Real(1), Real(0)}) throw PoleError("pole at s = 1");
      Real err = 0;
      CxR v = riemann_zeta(s, prec.working_digits, prec.max_terms, &err);
      return {v, err};
    }
    case AnalyticFamily::DirichletLLike:
      if (spec.coeffs.variant != CoeffVariant::PeriodicList)
        throw DomainError("DirichletLLike family requires periodic coefficients");
      return dirichlet_eval(spec, s, prec);
    case AnalyticFamily::SeriesOnly:
      return series_only_eval(spec, s, prec);
  }
  throw DomainError("unknown analytic family");
}

ValueWithError f_eval_pole_sep(const LFunctionSpec& spec, const CxR& s,
                               const PrecisionConfig& prec) {
  check_precision_config(prec);
  int m = spec.gamma.pole_order_m;
  if (m == 0) return f_eval(spec, s, prec);
  CxR extra{Real(1), Real(0)};
  for (int k = 1; k < m; ++k) extra *= (s - Real(1));
  switch (spec.family) {
    case AnalyticFamily::ZetaLike: {
      Real err = 0;
      CxR v = hurwitz_zeta_pole_sep(s, Real(1), prec.working_digits,
                                    prec.max_terms, &err);
      return {v * extra, err * abs(extra)};
    }
    case AnalyticFamily::DirichletLLike: {
      int q = spec.coeffs.period;
      CxR qs = exp(-s * log(CxR{Real(q), Real(0)}));
      CxR acc{};
      Real err = 0;
      for (int r = 1; r <= q; ++r) {
        CxR a = spec.coeffs.values[r - 1];
        if (a == CxR{}) continue;
        Real e = 0;
        acc += a * hurwitz_zeta_pole_sep(s, Real(r) / q, prec.working_digits,
                                         prec.max_terms, &e);
        err += abs(a) * e;
      }
      return {qs * acc * extra, err * abs(qs) * abs(extra)};
    }
    case AnalyticFamily::SeriesOnly:
      throw DomainError(
          "SeriesOnly family with a declared pole has no continuation");
  }
  throw DomainError("unknown analytic family");
}

ValueWithError xi_F_eval(const LFunctionSpec& spec, const CxR& s,
                         const PrecisionConfig& prec) {
  check_precision_config(prec);
  int m = spec.gamma.pole_order_m;
  bool near_one = m >= 1 && abs(s - Real(1)) < Real(1) / 2;
  bool near_zero = m >= 1 && abs(s) < Real(1) / 2;
  if (near_one) {
    CxR lg = detail::log_gamma_factor_core(spec.gamma, s, /*drop_s1_pow=*/true,
                                           near_zero);
    ValueWithError f = f_eval_pole_sep(spec, s, prec);
    CxR g = exp(lg);
    return {g * f.value, f.err * abs(g)};
  }
  if (near_zero) {
    CxR lg = detail::log_gamma_factor_core(spec.gamma, s, false,
                                           /*absorb_s_pole=*/true);
    ValueWithError f = f_eval(spec, s, prec);
    CxR g = exp(lg);
    return {g * f.value, f.err * abs(g)};
  }
  CxR lg = detail::log_gamma_factor_core(spec.gamma, s);
  ValueWithError f = f_eval(spec, s, prec);
  CxR g = exp(lg);
  return {g * f.value, f.err * abs(g)};
}

Real functional_eq_residual(const LFunctionSpec& spec, const CxR& s,
                            const PrecisionConfig& prec) {
  check_precision_config(prec);
  ValueWithError lhs = xi_F_eval(spec, s, prec);
  ValueWithError rhs = xi_F_eval(spec, CxR{Real(1) - s.re, s.im}, prec);
  CxR mirror = conj(rhs.value);
  Real floor = pow(Real(10), Real(-prec.working_digits));
  Real denom = std::max(abs(lhs.value), floor);
  return abs(lhs.value - mirror) / denom;
}

}  // namespace xideform
