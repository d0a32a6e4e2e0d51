#include <benchmark/benchmark.h>

#include "skewtab/exact_count.hpp"
#include "skewtab/nhlf.hpp"
#include "skewtab/skew_region.hpp"

using namespace skewtab;

static void BM_Determinant(benchmark::State& st) {
  const SkewShape s = thick_ribbon(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_determinant(s));
  st.counters["cells"] = static_cast<double>(s.size());
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

static void BM_BruteForce(benchmark::State& st) {
  const SkewShape s = thick_ribbon(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_brute_force(s));
}
BENCHMARK(BM_BruteForce)->Arg(3)->Arg(4);

static void BM_Nhlf(benchmark::State& st) {
  const SkewShape s = thick_ribbon(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_nhlf(s));
}
BENCHMARK(BM_Nhlf)->Arg(4)->Arg(6)->Arg(8);

static void BM_ThickHookProduct(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_thick_hook(c, c, c));
}
BENCHMARK(BM_ThickHookProduct)->Arg(10)->Arg(40);

static void BM_EnumerateH(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const SkewShape s = thick_hook(c, c, c);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_H(s).size());
}
BENCHMARK(BM_EnumerateH)->Arg(2)->Arg(3);
