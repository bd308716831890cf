#pragma once

// End-to-end acceptance checks behind `xideform verify` and the acceptance
// test binary. Each criterion prints one pass/fail line; the detail string
// carries the measured numbers.

#include <string>

namespace xideform::cli {

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult run_criterion(int id);

// "criterion N: PASS/FAIL (...s) — detail"
std::string format_result(const CriterionResult& r);

}  // namespace xideform::cli
