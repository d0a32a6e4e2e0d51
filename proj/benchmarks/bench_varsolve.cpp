#include <benchmark/benchmark.h>

#include "skewtab/lobachevsky.hpp"
#include "skewtab/varsolve.hpp"

using namespace skewtab;

static void BM_SigmaDerivatives(benchmark::State& st) {
  double s = 0.2;
  for (auto _ : st) {
    benchmark::DoNotOptimize(sigma_derivatives(s, 0.3));
    s = s < 0.6 ? s + 1e-4 : 0.2;
  }
}
BENCHMARK(BM_SigmaDerivatives);

static void BM_SolveHexagon(benchmark::State& st) {
  const MeshProfile m = hexagon_mesh(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(maximize(m, uniform_functional()).psi);
}
BENCHMARK(BM_SolveHexagon)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_ConstantThickHook(benchmark::State& st) {
  const StableProfile p = thick_hook_profile(1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(constant(p, static_cast<int>(st.range(0)), 0.05).constant);
}
BENCHMARK(BM_ConstantThickHook)->Arg(32)->Unit(benchmark::kMillisecond);
