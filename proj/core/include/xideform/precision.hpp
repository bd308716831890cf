#pragma once

#include "xideform/cxmath.hpp"
#include "xideform/errors.hpp"

namespace xideform {

// Tolerance contract shared by every evaluator. working_digits drives
// truncation depths and refusal thresholds; the arithmetic itself always runs
// on the fixed 50-digit scalar, so requests above 45 digits are refused
// rather than silently delivered at lower accuracy.
struct PrecisionConfig {
  int working_digits = 34;
  Real target_abs_err = Real("1e-12");
  long max_terms = 2000000;
  int max_refine = 60;
};

inline void check_precision_config(const PrecisionConfig& prec) {
  if (prec.working_digits < 15)
    throw DomainError("working_digits must be >= 15");
  if (prec.working_digits > 45)
    throw PrecisionError("working_digits > 45 exceeds the arithmetic backend");
  if (!(prec.target_abs_err > 0))
    throw DomainError("target_abs_err must be positive");
  if (prec.max_terms < 1 || prec.max_refine < 1)
    throw DomainError("max_terms and max_refine must be positive");
}

struct ValueWithError {
  CxR value;
  Real err = 0;
};

}  // namespace xideform
