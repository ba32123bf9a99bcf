#include "direach/shortcut.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "direach/hopset.hpp"
#include "direach/oracles.hpp"

namespace direach {

namespace {

bool has_arc(const WeightedDiGraph& g, Vertex u, Vertex v) {
  const auto cmp = [](const Edge& e, const std::pair<Vertex, Vertex>& p) {
    if (e.from != p.first) return e.from < p.first;
    return e.to < p.second;
  };
  const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v), cmp);
  return it != g.edges.end() && it->from == u && it->to == v;
}

std::vector<Vertex> sample_pivots(Vertex n, Vertex count, std::uint64_t seed) {
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates; rng() % m keeps the draw identical across platforms
  for (Vertex i = 0; i < count; ++i) {
    const auto j = i + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

WeightedDiGraph reversed(const WeightedDiGraph& g) {
  std::vector<Edge> es;
  es.reserve(g.edges.size());
  for (const Edge& e : g.edges) es.push_back(Edge{e.to, e.from, e.weight});
  return build_graph(g.n, es);
}

}  // namespace

ShortcutSet sampling_d_shortcut(const WeightedDiGraph& g, int hop_target, std::uint64_t seed) {
  if (hop_target < 1) throw std::invalid_argument("hop target must be at least 1");
  ShortcutSet out;
  out.target_hopbound = hop_target;
  const Vertex n = g.n;
  if (n <= 1 || hop_target >= n - 1) return out;  // n-1 hops always suffice

  const double want = std::ceil(3.0 * n * std::log(std::max<Vertex>(n, 2)) /
                                static_cast<double>(hop_target));
  const Vertex count = std::clamp<Vertex>(static_cast<Vertex>(want), 1, n);
  const std::vector<Vertex> pivots = sample_pivots(n, count, seed);

  const WeightedDiGraph rev = reversed(g);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Vertex p : pivots) {
    for (const Vertex v : bfs_reach(g, p).members) {
      if (v != p && !has_arc(g, p, v)) edges.emplace_back(p, v);
    }
    for (const Vertex u : bfs_reach(rev, p).members) {
      if (u != p && !has_arc(g, u, p)) edges.emplace_back(u, p);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.edges = std::move(edges);
  return out;
}

WeightedDiGraph augment(const WeightedDiGraph& g, const ShortcutSet& h) {
  std::vector<Edge> es = g.edges;
  es.reserve(es.size() + h.edges.size());
  for (const auto& [u, v] : h.edges) es.push_back(Edge{u, v, 1.0});
  return build_graph(g.n, es);
}

bool verify_hop_diameter(const WeightedDiGraph& g, const ShortcutSet& h, int hop_target) {
  const WeightedDiGraph aug = augment(g, h);
  for (Vertex s = 0; s < g.n; ++s) {
    const VertexSubset reach = bfs_reach(g, s);
    const std::vector<int> depth = hop_distances(aug, s);
    for (const Vertex v : reach.members) {
      const int d = depth[static_cast<std::size_t>(v)];
      if (d < 0 || d > hop_target) return false;
    }
  }
  return true;
}

int measure_hop_diameter(const WeightedDiGraph& g, const ShortcutSet& h) {
  const WeightedDiGraph aug = augment(g, h);
  int diameter = 0;
  for (Vertex s = 0; s < g.n; ++s) {
    for (const int d : hop_distances(aug, s)) diameter = std::max(diameter, d);
  }
  return diameter;
}

ShortcutSet tree_shortcut(const WeightedDiGraph& g, const DecompositionTree& t) {
  const TreeCheck check = validate_tree(underlying_skeleton(g), t);
  if (!check.ok) throw std::invalid_argument("decomposition tree invalid: " + check.message);

  // reachability is the unit-weight instance of the hopset walk
  std::vector<Edge> unit;
  unit.reserve(g.edges.size());
  for (const Edge& e : g.edges) unit.push_back(Edge{e.from, e.to, 1.0});
  const WeightedDiGraph gu = build_graph(g.n, unit);
  HopsetOptions opts;
  opts.node_cap = std::max<Vertex>(1024, g.n);
  const HopsetBuild build = build_tree_hopset(gu, t, 0.0, opts);

  ShortcutSet out;
  out.target_hopbound = t.hop_bound();
  out.edges.reserve(build.hopset.edges.size());
  for (const HopsetEdge& e : build.hopset.edges) {
    if (!has_arc(g, e.from, e.to)) out.edges.emplace_back(e.from, e.to);
  }
  return out;
}

}  // namespace direach
