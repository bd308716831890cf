// Runs acceptance criteria by number (all of them with no argument) and
// prints one pass/fail line each. Exit 0 iff everything passed.

#include "acceptance.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  using namespace xideform::cli;
  int lo = 1, hi = kCriterionCount;
  if (argc > 1) {
    lo = hi = std::atoi(argv[1]);
    if (lo < 1 || lo > kCriterionCount) {
      std::fprintf(stderr, "criterion number must be 1..%d\n", kCriterionCount);
      return 2;
    }
  }
  bool all = true;
  for (int i = lo; i <= hi; ++i) {
    CriterionResult r = run_criterion(i);
    std::printf("%s\n", format_result(r).c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
