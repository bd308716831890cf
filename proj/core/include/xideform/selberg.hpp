#pragma once

// Data model for Dirichlet series with a Gamma-factor functional equation,
// preset instances, and evaluators for F and the completed function xi.

#include "xideform/cxmath.hpp"
#include "xideform/errors.hpp"
#include "xideform/precision.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xideform {

enum class CoeffVariant { AllOnes, PeriodicList, ExplicitList };

struct CoeffRule {
  CoeffVariant variant = CoeffVariant::AllOnes;
  std::vector<CxR> values;  // one period (PeriodicList) or the full list
  int period = 0;           // PeriodicList only
  Real bound_const = 1;     // declared |a_n| <= bound_const * n^2
};

struct GammaFactorTerm {
  Real omega;
  CxR mu;
};

struct GammaData {
  CxR alpha{Real(1)};
  Real bigQ = 1;
  int pole_order_m = 0;
  std::vector<GammaFactorTerm> factors;
};

enum class AnalyticFamily { ZetaLike, DirichletLLike, SeriesOnly };

struct LFunctionSpec {
  std::string name;
  CoeffRule coeffs;
  GammaData gamma;
  AnalyticFamily family = AnalyticFamily::SeriesOnly;
};

// Throws DomainError on any structural invariant violation (empty
// coefficients, nonpositive Q or omega, Re mu < 0, zero alpha, declared
// coefficient bound violated on n <= 10^4).
void validate_spec(const LFunctionSpec& spec);

LFunctionSpec preset_zeta();
LFunctionSpec preset_chi4();

// Resolves a preset name, otherwise loads the JSON config at that path.
LFunctionSpec spec_from_name_or_file(const std::string& name_or_path);
LFunctionSpec spec_from_json_text(const std::string& json_text);
std::string spec_to_json_text(const LFunctionSpec& spec);

// Stable content digest used as the zero-cache key.
std::uint64_t spec_hash(const LFunctionSpec& spec);

CxR coeff(const LFunctionSpec& spec, long n);
CxD coeff_d(const LFunctionSpec& spec, long n);

// Sharp per-variant bound on |a_n|; never above bound_const * n^2.
Real coeff_envelope(const LFunctionSpec& spec, long n);
long coeff_support_end(const LFunctionSpec& spec);  // 0 = infinite support

ValueWithError f_eval(const LFunctionSpec& spec, const CxR& s,
                      const PrecisionConfig& prec);

// (s-1)^m F(s), finite across the pole.
ValueWithError f_eval_pole_sep(const LFunctionSpec& spec, const CxR& s,
                               const PrecisionConfig& prec);

ValueWithError xi_F_eval(const LFunctionSpec& spec, const CxR& s,
                         const PrecisionConfig& prec);

Real functional_eq_residual(const LFunctionSpec& spec, const CxR& s,
                            const PrecisionConfig& prec);

}  // namespace xideform
