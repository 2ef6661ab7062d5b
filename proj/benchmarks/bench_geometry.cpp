#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "msmcts/geometry.hpp"

namespace {

using namespace msmcts;

void BM_TunnelTo(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coord(1, 19);
  std::vector<Point> targets(1024);
  for (Point& p : targets) p = {coord(rng), coord(rng)};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tunnel_to(targets[i++ & 1023], {10, -3}, 1.0, 4.0));
  }
}
BENCHMARK(BM_TunnelTo);

void BM_TunnelIntersectsDisc(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> coord(1, 19);
  std::vector<Tunnel> tunnels;
  std::vector<Disc> discs;
  for (int k = 0; k < 1024; ++k) {
    tunnels.push_back(tunnel_to({coord(rng), coord(rng)}, {10, -3}, 1.0, 4.0));
    discs.push_back({{coord(rng), coord(rng)}, 1.0});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tunnel_intersects_disc(tunnels[i & 1023], discs[(i * 7) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_TunnelIntersectsDisc);

}  // namespace
