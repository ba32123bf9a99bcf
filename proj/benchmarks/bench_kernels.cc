#include <benchmark/benchmark.h>

#include <random>

#include "direach/matrix.hpp"

using namespace direach;

namespace {

BoolMatrix random_bool(Vertex rows, Vertex cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BoolMatrix m(rows, cols);
  for (Vertex i = 0; i < rows; ++i) {
    for (Vertex j = 0; j < cols; ++j) {
      if (rng() % 100 < 20) m.set(i, j);
    }
  }
  return m;
}

DistMatrix random_dist(Vertex rows, Vertex cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DistMatrix m(rows, cols);
  for (Vertex i = 0; i < rows; ++i) {
    for (Vertex j = 0; j < cols; ++j) {
      if (rng() % 100 < 75) m.at(i, j) = static_cast<std::int64_t>(rng() % 4096);
    }
  }
  return m;
}

void BM_BoolMatmul(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const auto r = static_cast<Vertex>(state.range(1));
  const BoolMatrix b = random_bool(r, n, 1);
  const BoolMatrix a = random_bool(n, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bool_matmul(b, a, static_cast<int>(state.range(2))));
  }
}
BENCHMARK(BM_BoolMatmul)
    ->Args({512, 32, 1})
    ->Args({512, 32, 4})
    ->Args({1024, 64, 1})
    ->Args({1024, 64, 4});

void BM_MinplusProduct(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const auto r = static_cast<Vertex>(state.range(1));
  const DistMatrix b = random_dist(r, n, 3);
  const DistMatrix a = random_dist(n, n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minplus_product(b, a, static_cast<int>(state.range(2))));
  }
}
BENCHMARK(BM_MinplusProduct)->Args({256, 16, 1})->Args({256, 16, 4})->Args({512, 32, 4});

void BM_ApproxDistanceProduct(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const DistMatrix b = random_dist(static_cast<Vertex>(state.range(1)), n, 5);
  const DistMatrix a = random_dist(n, n, 6);
  const double xi = 1.0 / static_cast<double>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_distance_product(b, a, xi, 1));
  }
}
BENCHMARK(BM_ApproxDistanceProduct)->Args({256, 16, 4})->Args({256, 16, 16})->Args({512, 32, 16});

}  // namespace

BENCHMARK_MAIN();
