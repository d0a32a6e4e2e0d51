#include <benchmark/benchmark.h>

#include "skewtab/sampler.hpp"
#include "skewtab/skew_region.hpp"

using namespace skewtab;

static void BM_ChainSteps(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const SkewShape s = thick_hook(c, c, c);
  const SkewRegion sr(s);
  Chain ch(initial_heights(sr), st.range(1) ? WeightField::hook(s.outer()) : WeightField::uniform(), 1);
  for (auto _ : st) ch.run(10000);
  st.SetItemsProcessed(st.iterations() * 10000);
}
BENCHMARK(BM_ChainSteps)->Args({4, 0})->Args({4, 1})->Args({16, 1});

static void BM_Ais(benchmark::State& st) {
  const SkewShape s = thick_hook(2, 2, 2);
  AisConfig cfg;
  cfg.particles = 16;
  cfg.volume_levels = 50;
  cfg.threads = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(estimate_logZ(s, WeightField::hook(s.outer()), cfg).value);
}
BENCHMARK(BM_Ais)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
