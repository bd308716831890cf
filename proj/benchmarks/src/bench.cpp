#include "xideform/mellin.hpp"
#include "xideform/zerofind.hpp"

#include <benchmark/benchmark.h>

using namespace xideform;

namespace {
const PrecisionConfig kPrec{};
}

static void BM_FtScanEval(benchmark::State& state) {
  // the inner loop of counting/locating: one double-precision series eval
  LFunctionSpec zeta = preset_zeta();
  FtScanFn f = make_ft_scan(zeta, -1, -0.35, static_cast<double>(-state.range(0)));
  CxD s{-0.25, 104.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(s));
    s.im += 1e-6;  // defeat value caching without changing the cost profile
  }
}
BENCHMARK(BM_FtScanEval)->Arg(6)->Arg(9)->Arg(12);

static void BM_FtEvalFull(benchmark::State& state) {
  LFunctionSpec zeta = preset_zeta();
  CxR s{Real("0.5"), Real(30)};
  for (auto _ : state)
    benchmark::DoNotOptimize(f_t_eval(zeta, -1, s, kPrec));
}
BENCHMARK(BM_FtEvalFull);

static void BM_PhiF(benchmark::State& state) {
  LFunctionSpec chi4 = preset_chi4();
  Real u("0.2");
  for (auto _ : state)
    benchmark::DoNotOptimize(phi_F(chi4, u, kPrec));
}
BENCHMARK(BM_PhiF);

static void BM_LogGammaT(benchmark::State& state) {
  LFunctionSpec zeta = preset_zeta();
  CxR s{Real("0.4"), Real(60)};
  for (auto _ : state)
    benchmark::DoNotOptimize(log_gamma_t(zeta, -1, s));
}
BENCHMARK(BM_LogGammaT);

static void BM_Btn(benchmark::State& state) {
  LFunctionSpec zeta = preset_zeta();
  CxR s{Real("0.4"), Real(40)};
  for (auto _ : state)
    benchmark::DoNotOptimize(b_tn(zeta, -1, state.range(0), s, kPrec));
}
BENCHMARK(BM_Btn)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
