#include "direach/oracles.hpp"

#include <queue>
#include <stdexcept>

namespace direach {

VertexSubset bfs_reach(const WeightedDiGraph& g, Vertex s) {
  if (s < 0 || s >= g.n) throw std::invalid_argument("source out of range");
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  std::vector<Vertex> queue{s};
  seen[static_cast<std::size_t>(s)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (std::int64_t e = g.out_offsets[u]; e < g.out_offsets[u + 1]; ++e) {
      const Vertex v = g.out_targets[e];
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        queue.push_back(v);
      }
    }
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) members.push_back(v);
  }
  return VertexSubset{std::move(members), g.n};
}

DistanceVector dijkstra(const WeightedDiGraph& g, Vertex s) {
  if (s < 0 || s >= g.n) throw std::invalid_argument("source out of range");
  DistanceVector out;
  out.source = s;
  out.dist.assign(static_cast<std::size_t>(g.n), kInf);
  out.dist[static_cast<std::size_t>(s)] = 0.0;

  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, s);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > out.dist[static_cast<std::size_t>(u)]) continue;
    for (std::int64_t e = g.out_offsets[u]; e < g.out_offsets[u + 1]; ++e) {
      const Vertex v = g.out_targets[e];
      const double cand = d + g.out_weights[e];
      if (cand < out.dist[static_cast<std::size_t>(v)]) {
        out.dist[static_cast<std::size_t>(v)] = cand;
        heap.emplace(cand, v);
      }
    }
  }
  return out;
}

DistanceVector k_bounded_distances(const WeightedDiGraph& g, Vertex s, int k) {
  if (s < 0 || s >= g.n) throw std::invalid_argument("source out of range");
  if (k < 0) throw std::invalid_argument("hop bound must be non-negative");
  DistanceVector out;
  out.source = s;
  out.dist.assign(static_cast<std::size_t>(g.n), kInf);
  out.dist[static_cast<std::size_t>(s)] = 0.0;
  std::vector<double> next = out.dist;
  for (int round = 0; round < k; ++round) {
    bool changed = false;
    // relax from the previous round only, so round i holds <= i-hop paths
    for (Vertex u = 0; u < g.n; ++u) {
      const double du = out.dist[static_cast<std::size_t>(u)];
      if (du == kInf) continue;
      for (std::int64_t e = g.out_offsets[u]; e < g.out_offsets[u + 1]; ++e) {
        const Vertex v = g.out_targets[e];
        const double cand = du + g.out_weights[e];
        if (cand < next[static_cast<std::size_t>(v)]) {
          next[static_cast<std::size_t>(v)] = cand;
          changed = true;
        }
      }
    }
    out.dist = next;
    if (!changed) break;
  }
  return out;
}

BoolMatrix transitive_closure(const WeightedDiGraph& g, Vertex cap) {
  if (g.n > cap) throw std::invalid_argument("transitive closure cap exceeded");
  BoolMatrix a = BoolMatrix::identity(g.n);
  for (const Edge& e : g.edges) a.set(e.from, e.to);
  Vertex hops = 1;
  while (hops < g.n) {
    BoolMatrix sq = bool_matmul(a, a);
    if (sq == a) break;
    a = std::move(sq);
    hops *= 2;
  }
  return a;
}

std::vector<int> hop_distances(const WeightedDiGraph& g, Vertex s) {
  std::vector<int> depth(static_cast<std::size_t>(g.n), -1);
  depth[static_cast<std::size_t>(s)] = 0;
  std::vector<Vertex> queue{s};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (std::int64_t e = g.out_offsets[u]; e < g.out_offsets[u + 1]; ++e) {
      const Vertex v = g.out_targets[e];
      if (depth[static_cast<std::size_t>(v)] < 0) {
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return depth;
}

}  // namespace direach
