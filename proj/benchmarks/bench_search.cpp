#include <benchmark/benchmark.h>

#include "msmcts/mcts.hpp"
#include "msmcts/orchestrator.hpp"

namespace {

using namespace msmcts;

Scene scene_with(std::size_t n, std::uint64_t seed) {
  SceneConfig cfg;
  cfg.n_objects = n;
  cfg.rng_seed = seed;
  return generate_scene(cfg);
}

void BM_NewRegion(benchmark::State& state) {
  const Scene s = scene_with(6, 3);
  const StageOrder order = stage_order(build_dependency_graph(s), s);
  const StageContext ctx(s, order, 0);
  const ObjectId mover = order.order.back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(new_region(ctx, mover, {}, s.start, 5));
  }
}
BENCHMARK(BM_NewRegion);

// Full plan, no wall clock; arg = object count.
void BM_Plan(benchmark::State& state) {
  const Scene s = scene_with(static_cast<std::size_t>(state.range(0)), 11);
  SearchBudget b;
  b.wall_clock_limit = SearchBudget::kNoTimeout;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan(s, b));
  }
}
BENCHMARK(BM_Plan)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
