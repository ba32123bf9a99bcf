#include <doctest.h>

#include <cmath>

#include "direach/oracles.hpp"
#include "direach/pipeline.hpp"
#include "support/testgen.hpp"

using namespace direach;

namespace {

DecompositionTree tree_of(const WeightedDiGraph& g, int tau = 8) {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kBfsHeuristic;
  return build_decomposition_tree(underlying_skeleton(g), make_finder(opts), tau);
}

BoolMatrix reach_oracle(const WeightedDiGraph& g, const VertexSubset& sources) {
  BoolMatrix rows(sources.size(), g.n);
  for (Vertex i = 0; i < sources.size(); ++i) {
    for (const Vertex v : bfs_reach(g, sources.members[i]).members) rows.set(i, v);
  }
  return rows;
}

}  // namespace

TEST_CASE("omega_sigma: table knots and interpolation") {
  CHECK(omega_sigma(0.50) == doctest::Approx(2.042994).epsilon(1e-12));
  CHECK(omega_sigma(0.30) == 2.0);
  CHECK(omega_sigma(0.475) == doctest::Approx(2.033391).epsilon(1e-9));
  CHECK(omega_sigma(1.0) == doctest::Approx(2.371552));
  CHECK_THROWS_AS(omega_sigma(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(omega_sigma(1.1), std::invalid_argument);
}

TEST_CASE("omega table: increasing, and piecewise-linear convex") {
  const auto& knots = OmegaTable::knots();
  double prev_slope = 0.0;  // the flat segment below the dual exponent
  for (std::size_t i = 1; i < knots.size(); ++i) {
    CHECK(knots[i].first > knots[i - 1].first);
    CHECK(knots[i].second >= knots[i - 1].second);
    const double slope =
        (knots[i].second - knots[i - 1].second) / (knots[i].first - knots[i - 1].first);
    CHECK(slope >= prev_slope);
    prev_slope = slope;
  }
}

TEST_CASE("choose_delta: dense and sparse exponents") {
  const QueryPlan dense = choose_delta(0.5, 2.0);
  CHECK(dense.delta == doctest::Approx(0.319002).epsilon(1e-6));
  CHECK(dense.g == doctest::Approx(2.3621996).epsilon(5e-4));

  CHECK(choose_delta(0.4, 2.0).g == doctest::Approx(2.33969).epsilon(5e-4));

  // mu = 2 reduces the sparse formula to the dense one exactly
  for (const double sigma : {0.35, 0.5, 0.8}) {
    CHECK(choose_delta(sigma, 2.0).delta ==
          doctest::Approx(1.0 - omega_sigma(sigma) / 3.0).epsilon(1e-12));
  }

  CHECK(choose_delta(0.5, 1.9).g == doctest::Approx(2.3287).epsilon(5e-4));
  CHECK_THROWS_AS(choose_delta(-0.1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(choose_delta(0.5, 2.5), std::invalid_argument);
}

TEST_CASE("plan_for_graph: hop target clamps to sqrt(n)") {
  const QueryPlan plan = plan_for_graph(100, 10, 10000);
  CHECK(plan.hop_target >= 1);
  CHECK(plan.hop_target <= 10);
  CHECK(plan.sigma == doctest::Approx(0.5));
  CHECK(plan.mu == doctest::Approx(2.0));
}

TEST_CASE("direach: reachability rows on small graphs") {
  const WeightedDiGraph path = testgen::path_graph(3);
  const BoolMatrix rows = direach::direach(path, make_subset({0}, 3), 2, 1);
  CHECK(rows.get(0, 0));
  CHECK(rows.get(0, 1));
  CHECK(rows.get(0, 2));

  const WeightedDiGraph edgeless = build_graph(3, {});
  const BoolMatrix solo = direach::direach(edgeless, make_subset({0}, 3), 3, 1);
  CHECK(solo.get(0, 0));
  CHECK_FALSE(solo.get(0, 1));
  CHECK_FALSE(solo.get(0, 2));

  const WeightedDiGraph cyc = testgen::cycle_graph(3);
  const QueryPlan plan = plan_for_graph(3, 1, 3);
  const BoolMatrix all = direach::direach(cyc, make_subset({1}, 3), plan.hop_target, 1);
  for (Vertex v = 0; v < 3; ++v) CHECK(all.get(0, v));

  CHECK_THROWS_AS(direach::direach(path, make_subset({0}, 3), 0, 1), std::invalid_argument);

  const BoolMatrix empty = direach::direach(path, make_subset({}, 3), 2, 1);
  CHECK(empty.rows() == 0);
}

TEST_CASE("direach and direach_via_tree match the BFS oracle") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Vertex n = 20 + static_cast<Vertex>(seed * 6);
    const WeightedDiGraph g = testgen::random_digraph(n, 3 * n, seed);
    std::vector<Vertex> src;
    for (Vertex v = 0; v < n; v += 5) src.push_back(v);
    const VertexSubset sources = make_subset(src, n);
    const BoolMatrix expect = reach_oracle(g, sources);

    const QueryPlan plan = plan_for_graph(n, sources.size(), g.edge_count());
    CHECK(direach::direach(g, sources, plan.hop_target, seed) == expect);

    const DecompositionTree t = tree_of(g, 6);
    int iterations = 0;
    CHECK(direach_via_tree(g, sources, t, 1, &iterations) == expect);
    CHECK(iterations <= t.hop_bound());
  }
}

TEST_CASE("direach_via_tree: leaf-only tree reaches the fixpoint immediately") {
  const WeightedDiGraph g = testgen::random_digraph(7, 14, 2);
  const DecompositionTree t = tree_of(g, 8);
  REQUIRE(t.nodes.size() == 1);
  int iterations = 0;
  const BoolMatrix rows = direach_via_tree(g, full_subset(7), t, 1, &iterations);
  CHECK(iterations == 1);
  CHECK(rows == transitive_closure(g));
}

TEST_CASE("direach_via_tree: S = V gives the transitive closure") {
  const WeightedDiGraph g = testgen::random_digraph(24, 60, 9);
  const DecompositionTree t = tree_of(g, 6);
  CHECK(direach_via_tree(g, full_subset(24), t) == transitive_closure(g));
}

TEST_CASE("approx_sxv_distances: unit path bounds") {
  const WeightedDiGraph g = testgen::path_graph(8);
  const DecompositionTree t = tree_of(g, 2);
  const SxvDistances est = approx_sxv_distances(g, make_subset({0}, 8), 0.5, t);
  CHECK(est.at(0, 7) >= 7.0);
  CHECK(est.at(0, 7) <= 10.5);
  CHECK(est.at(0, 0) == 0.0);
}

TEST_CASE("approx_sxv_distances: unreachable stays infinite") {
  const WeightedDiGraph g = build_graph(4, {{0, 1, 2.0}, {2, 3, 1.0}});
  const DecompositionTree t = tree_of(g, 2);
  const SxvDistances est = approx_sxv_distances(g, make_subset({0}, 4), 0.5, t);
  CHECK(est.at(0, 2) == kInf);
  CHECK(est.at(0, 3) == kInf);
  CHECK(est.at(0, 1) >= 2.0);
}

TEST_CASE("approx_sxv_distances: exact mode equals dijkstra") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Vertex n = 16 + static_cast<Vertex>(seed * 8);
    const WeightedDiGraph g = testgen::random_connected_digraph(n, n / 2, seed, 30);
    const DecompositionTree t = tree_of(g, 6);
    DistanceOptions opts;
    opts.exact = true;
    const VertexSubset sources = make_subset({0, n / 2, n - 1}, n);
    const SxvDistances est = approx_sxv_distances(g, sources, 1.0, t, opts);
    for (Vertex i = 0; i < sources.size(); ++i) {
      const DistanceVector d = dijkstra(g, sources.members[i]);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(est.at(i, v) == d.dist[v]);
      }
    }
  }
}

TEST_CASE("approx_sxv_distances: sandwich bound on random weighted graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Vertex n = 20 + static_cast<Vertex>(seed * 10);
    const WeightedDiGraph g = testgen::random_connected_digraph(n, n / 2, seed + 17, 1000);
    const DecompositionTree t = tree_of(g, 6);
    const VertexSubset sources = make_subset({0, 1, n - 1}, n);
    for (const double eps : {0.1, 0.5, 1.0}) {
      const SxvDistances est = approx_sxv_distances(g, sources, eps, t);
      for (Vertex i = 0; i < sources.size(); ++i) {
        const DistanceVector d = dijkstra(g, sources.members[i]);
        for (Vertex v = 0; v < n; ++v) {
          if (d.dist[v] == kInf) {
            CHECK(est.at(i, v) == kInf);
            continue;
          }
          CHECK(est.at(i, v) >= d.dist[v] - 1e-9);
          CHECK(est.at(i, v) <= (1.0 + eps) * d.dist[v] + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("approx_sxv_distances: rejects bad epsilon") {
  const WeightedDiGraph g = testgen::path_graph(4);
  const DecompositionTree t = tree_of(g, 2);
  CHECK_THROWS_AS(approx_sxv_distances(g, make_subset({0}, 4), 0.0, t), std::invalid_argument);
}
