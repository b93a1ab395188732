#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "lieharm/morphisms.hpp"
#include "lieharm/pipeline.hpp"
#include "lieharm/verify.hpp"

using namespace lieharm;

namespace {

const char* const kIds[] = {"sl2", "sl3", "sl4", "su12", "so13", "so23", "sp4", "g2split"};

const AlgebraStructure& cached(const std::string& id) {
  static std::map<std::string, AlgebraStructure> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, analyze_algebra(resolve_algebra(id))).first;
  return it->second;
}

void BM_Analyze(benchmark::State& state) {
  const AlgebraSpec spec = resolve_algebra(kIds[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_algebra(spec));
  state.SetLabel(spec.id);
}
BENCHMARK(BM_Analyze)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_GroupMultiply(benchmark::State& state) {
  const auto& s = cached(kIds[state.range(0)]);
  const auto pts = sample_points(s.group, 64, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.group.multiply(pts[i % 64], pts[(i + 1) % 64]));
    ++i;
  }
  state.SetLabel(kIds[state.range(0)]);
}
BENCHMARK(BM_GroupMultiply)->DenseRange(0, 7);

void BM_PhiLaplacian(benchmark::State& state) {
  const auto& s = cached(kIds[state.range(0)]);
  const auto ctx = build_beta_context(s, 0);
  const auto phi = build_phi(s.group, ctx.rankone);
  const ScalarFunction f = pullback(ctx.projection, [&](const GroupPoint& p) { return phi(p); });
  const auto pts = sample_points(s.group, 16, 11);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(laplacian(ctx.source, s.group, f, pts[i++ % 16]));
  state.SetLabel(kIds[state.range(0)]);
}
BENCHMARK(BM_PhiLaplacian)->DenseRange(0, 7)->Unit(benchmark::kMicrosecond);

void BM_VerifyAll(benchmark::State& state) {
  const auto& s = cached(kIds[state.range(0)]);
  VerifyOptions opts;
  opts.samples = 10;
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(s, opts));
  state.SetLabel(kIds[state.range(0)]);
}
BENCHMARK(BM_VerifyAll)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
