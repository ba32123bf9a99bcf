#include <doctest.h>

#include "direach/separator.hpp"
#include "support/testgen.hpp"

using namespace direach;

namespace {

Skeleton path_skeleton(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return skeleton_from_edges(n, std::move(edges));
}

Skeleton complete_skeleton(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return skeleton_from_edges(n, std::move(edges));
}

Skeleton grid_skeleton(int rows, int cols) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto id = [cols](int r, int c) { return static_cast<Vertex>(r * cols + c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return skeleton_from_edges(static_cast<Vertex>(rows * cols), std::move(edges));
}

void check_valid_separator(const Skeleton& g, const SeparatorResult& r) {
  std::vector<int> where(static_cast<std::size_t>(g.n), -1);
  for (Vertex v : r.part_a.members) where[v] = 0;
  for (Vertex v : r.part_b.members) where[v] = 1;
  for (Vertex v : r.sep.members) where[v] = 2;
  for (Vertex v = 0; v < g.n; ++v) CHECK(where[v] >= 0);  // partition
  for (const auto& [a, b] : g.edges) {
    const bool crossing = (where[a] == 0 && where[b] == 1) || (where[a] == 1 && where[b] == 0);
    CHECK_FALSE(crossing);
  }
}

}  // namespace

TEST_CASE("find_separator: exhaustive picks the centered cut of P5") {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kExhaustive;
  const SeparatorResult r = find_separator(path_skeleton(5), opts);
  CHECK(r.sep.members == std::vector<Vertex>{2});
  CHECK(r.part_a.members == std::vector<Vertex>{0, 1});
  CHECK(r.part_b.members == std::vector<Vertex>{3, 4});
}

TEST_CASE("find_separator: staircase cut of the 4x4 grid") {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kGrid;
  opts.grid_rows = 4;
  opts.grid_cols = 4;
  const Skeleton g = grid_skeleton(4, 4);
  const SeparatorResult r = find_separator(g, opts);
  CHECK(r.sep.size() == 4);
  CHECK(r.part_a.size() == 6);
  CHECK(r.part_b.size() == 6);
  check_valid_separator(g, r);
}

TEST_CASE("find_separator: complete graph needs at least two separator vertices") {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kExhaustive;
  const SeparatorResult r = find_separator(complete_skeleton(4), opts);
  CHECK(r.sep.size() >= 2);
  check_valid_separator(complete_skeleton(4), r);
}

TEST_CASE("find_separator: requires two vertices") {
  SeparatorOptions opts;
  CHECK_THROWS_AS(find_separator(path_skeleton(1), opts), std::invalid_argument);
}

TEST_CASE("find_separator: bfs heuristic yields valid separators") {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kBfsHeuristic;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Vertex n = 10 + static_cast<Vertex>(seed * 5);
    const Skeleton g = testgen::random_connected_skeleton(n, 3, seed);
    const SeparatorResult r = find_separator(g, opts);
    check_valid_separator(g, r);
    CHECK(r.ratio <= 2.0 / 3.0 + 1e-9);
  }
}

TEST_CASE("balance_to_half: P4 lands within n/2") {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kExhaustive;
  const HalfSeparator h = balance_to_half(path_skeleton(4), make_finder(opts));
  CHECK(h.part_a.size() <= 2);
  CHECK(h.part_b.size() <= 2);
  REQUIRE(!h.steps.empty());
  // initial state of the loop
  CHECK(h.steps[0].a.empty());
  CHECK(h.steps[0].b.empty());
  CHECK(h.steps[0].c.empty());
  CHECK(h.steps[0].d.size() == 4);
}

TEST_CASE("balance_to_half: single vertex goes to the separator") {
  const Skeleton g = skeleton_from_edges(1, {});
  const HalfSeparator h = balance_to_half(g, make_finder(SeparatorOptions{}));
  CHECK(h.part_a.empty());
  CHECK(h.part_b.empty());
  CHECK(h.sep.members == std::vector<Vertex>{0});
}

TEST_CASE("balance_to_half: loop invariants on random connected skeletons") {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kExhaustive;
  const double lambda = opts.ratio;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Vertex n = 8 + static_cast<Vertex>(seed * 3);
    const Skeleton g = testgen::random_connected_skeleton(n, 2, seed);
    const HalfSeparator h = balance_to_half(g, make_finder(opts));

    CHECK(h.part_a.size() <= (n + 1) / 2);
    CHECK(h.part_b.size() <= (n + 1) / 2);
    CHECK(h.part_a.size() <= h.part_b.size());
    CHECK(h.part_b.size() <= h.part_a.size() + h.sep.size());

    for (std::size_t i = 0; i < h.steps.size(); ++i) {
      const BalanceStep& st = h.steps[i];
      // partition
      CHECK(st.a.size() + st.b.size() + st.c.size() + st.d.size() ==
            static_cast<std::size_t>(n));
      // no edges between A,B / A,D / B,D
      std::vector<int> where(static_cast<std::size_t>(n), -1);
      for (Vertex v : st.a) where[v] = 0;
      for (Vertex v : st.b) where[v] = 1;
      for (Vertex v : st.c) where[v] = 2;
      for (Vertex v : st.d) where[v] = 3;
      for (const auto& [x, y] : g.edges) {
        const int wx = where[x], wy = where[y];
        const bool forbidden = (wx == 0 && wy == 1) || (wx == 1 && wy == 0) ||
                               (wx == 0 && wy == 3) || (wx == 3 && wy == 0) ||
                               (wx == 1 && wy == 3) || (wx == 3 && wy == 1);
        CHECK_FALSE(forbidden);
      }
      // |A| <= |B| <= |A| + |C| + |D|
      CHECK(st.a.size() <= st.b.size());
      CHECK(st.b.size() <= st.a.size() + st.c.size() + st.d.size());
      // |D_{i+1}| <= lambda |D_i|   (the last step may cover the lone-vertex rule)
      if (i + 1 < h.steps.size() && st.d.size() >= 2) {
        CHECK(static_cast<double>(h.steps[i + 1].d.size()) <= lambda * st.d.size() + 1e-9);
      }
    }
  }
}

TEST_CASE("make_doubly_incident: spec cases") {
  SUBCASE("star center touching both sides is kept") {
    const Skeleton star = skeleton_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    SeparatorResult in;
    in.sep = make_subset({0}, 5);
    in.part_a = make_subset({1, 2}, 5);
    in.part_b = make_subset({3, 4}, 5);
    const SeparatorResult out = make_doubly_incident(star, in);
    CHECK(out.sep.members == std::vector<Vertex>{0});
    CHECK(out.part_a.members == std::vector<Vertex>{1, 2});
    CHECK(out.part_b.members == std::vector<Vertex>{3, 4});
  }
  SUBCASE("one-sided separator vertex moves to its side") {
    // 0-1 edge only; sep {0} has neighbors only in A = {1}
    const Skeleton g = skeleton_from_edges(3, {{0, 1}});
    SeparatorResult in;
    in.sep = make_subset({0}, 3);
    in.part_a = make_subset({1}, 3);
    in.part_b = make_subset({2}, 3);
    const SeparatorResult out = make_doubly_incident(g, in);
    CHECK(out.sep.empty());
    CHECK(out.part_a.contains(0));
    CHECK(out.part_a.contains(1));
  }
  SUBCASE("isolated separator vertex joins the smaller part, ties to A") {
    const Skeleton g = skeleton_from_edges(3, {});
    SeparatorResult in;
    in.sep = make_subset({2}, 3);
    in.part_a = make_subset({0}, 3);
    in.part_b = make_subset({1}, 3);
    const SeparatorResult out = make_doubly_incident(g, in);
    CHECK(out.part_a.contains(2));
  }
}

TEST_CASE("make_doubly_incident: every kept separator vertex touches both parts") {
  SeparatorOptions opts;
  opts.strategy = SeparatorStrategy::kBfsHeuristic;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Vertex n = 12 + static_cast<Vertex>(seed * 4);
    const Skeleton g = testgen::random_connected_skeleton(n, 4, seed + 50);
    const SeparatorResult out = make_doubly_incident(g, find_separator(g, opts));
    check_valid_separator(g, out);
    for (Vertex v : out.sep.members) {
      bool in_a = false, in_b = false;
      for (std::int64_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
        in_a |= out.part_a.contains(g.neighbors[e]);
        in_b |= out.part_b.contains(g.neighbors[e]);
      }
      CHECK(in_a);
      CHECK(in_b);
    }
  }
}
