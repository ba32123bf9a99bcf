#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "direach/decomposition.hpp"
#include "direach/oracles.hpp"
#include "direach/pipeline.hpp"

using namespace direach;

namespace {

WeightedDiGraph random_digraph(Vertex n, std::int64_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  while (static_cast<std::int64_t>(edges.size()) < m) {
    const auto u = static_cast<Vertex>(rng() % n);
    const auto v = static_cast<Vertex>(rng() % n);
    if (u != v) edges.push_back(Edge{u, v, 1.0});
  }
  return build_graph(n, edges);
}

VertexSubset sqrt_sources(Vertex n) {
  const auto k = static_cast<Vertex>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<Vertex> src;
  for (Vertex i = 0; i < k; ++i) src.push_back(static_cast<Vertex>(i * (n / k)));
  return make_subset(std::move(src), n);
}

void BM_Direach(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const WeightedDiGraph g = random_digraph(n, 4 * n, 11);
  const VertexSubset sources = sqrt_sources(n);
  const QueryPlan plan = plan_for_graph(n, sources.size(), g.edge_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(direach::direach(g, sources, plan.hop_target, 21));
  }
}
BENCHMARK(BM_Direach)->Arg(128)->Arg(256)->Arg(512);

void BM_DireachViaTree(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const WeightedDiGraph g = random_digraph(n, 4 * n, 12);
  const VertexSubset sources = sqrt_sources(n);
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kBfsHeuristic;
  const DecompositionTree t =
      build_decomposition_tree(underlying_skeleton(g), make_finder(opts), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(direach_via_tree(g, sources, t));
  }
}
BENCHMARK(BM_DireachViaTree)->Arg(128)->Arg(256);

void BM_NaiveReachBaseline(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const WeightedDiGraph g = random_digraph(n, 4 * n, 13);
  const VertexSubset sources = sqrt_sources(n);
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const Vertex s : sources.members) total += bfs_reach(g, s).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_NaiveReachBaseline)->Arg(128)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
