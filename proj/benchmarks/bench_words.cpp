#include <benchmark/benchmark.h>

#include "graphprod/wall.hpp"
#include "graphprod/word.hpp"

namespace {

gp::ProductSpec pentagon() {
  auto graph = gp::VertexGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::vector<gp::VertexGroup> groups(5, gp::cyclic_group(2));
  return gp::make_spec("pentagon", std::move(graph), std::move(groups));
}

void BM_reduce(benchmark::State& state) {
  gp::ProductSpec spec = pentagon();
  std::vector<gp::Syllable> raw;
  for (int i = 0; i < state.range(0); ++i) raw.push_back({i % 5, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp::GroupElement::reduce(spec, raw));
  }
}
BENCHMARK(BM_reduce)->Arg(8)->Arg(32)->Arg(128);

void BM_ball(benchmark::State& state) {
  gp::ProductSpec spec = pentagon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp::enumerate_ball(spec, state.range(0)));
  }
}
BENCHMARK(BM_ball)->Arg(2)->Arg(3)->Arg(4);

void BM_separating_walls(benchmark::State& state) {
  gp::ProductSpec spec = pentagon();
  auto g = gp::GroupElement::parse(spec, "0:1 2:1 4:1 1:1");
  auto e = gp::GroupElement::identity(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp::separating_walls(g, e));
  }
}
BENCHMARK(BM_separating_walls);

}  // namespace

BENCHMARK_MAIN();
