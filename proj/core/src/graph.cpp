#include "direach/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace direach {

namespace {

void build_csr(WeightedDiGraph& g) {
  const auto m = g.edges.size();
  g.out_offsets.assign(static_cast<std::size_t>(g.n) + 1, 0);
  g.in_offsets.assign(static_cast<std::size_t>(g.n) + 1, 0);
  g.out_targets.resize(m);
  g.out_weights.resize(m);
  g.in_sources.resize(m);
  g.in_weights.resize(m);

  for (const Edge& e : g.edges) {
    ++g.out_offsets[e.from + 1];
    ++g.in_offsets[e.to + 1];
  }
  for (Vertex v = 0; v < g.n; ++v) {
    g.out_offsets[v + 1] += g.out_offsets[v];
    g.in_offsets[v + 1] += g.in_offsets[v];
  }
  std::vector<std::int64_t> out_pos(g.out_offsets.begin(), g.out_offsets.end() - 1);
  std::vector<std::int64_t> in_pos(g.in_offsets.begin(), g.in_offsets.end() - 1);
  for (const Edge& e : g.edges) {
    const auto op = out_pos[e.from]++;
    g.out_targets[op] = e.to;
    g.out_weights[op] = e.weight;
    const auto ip = in_pos[e.to]++;
    g.in_sources[ip] = e.from;
    g.in_weights[ip] = e.weight;
  }
}

double compute_aspect_ratio(const std::vector<Edge>& edges) {
  double lo = kInf, hi = 0.0;
  for (const Edge& e : edges) {
    if (e.weight > 0.0) {
      lo = std::min(lo, e.weight);
      hi = std::max(hi, e.weight);
    }
  }
  if (hi <= 0.0) return 1.0;  // no non-zero weights
  return hi / lo;
}

}  // namespace

bool WeightedDiGraph::has_integral_weights() const {
  for (const Edge& e : edges) {
    if (e.weight != std::floor(e.weight)) return false;
  }
  return true;
}

bool VertexSubset::contains(Vertex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

VertexSubset make_subset(std::vector<Vertex> members, Vertex origin_n) {
  for (Vertex v : members) {
    if (v < 0 || v >= origin_n) {
      throw std::invalid_argument("vertex subset member " + std::to_string(v) +
                                  " out of range [0," + std::to_string(origin_n) + ")");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return VertexSubset{std::move(members), origin_n};
}

VertexSubset full_subset(Vertex n) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  return VertexSubset{std::move(all), n};
}

WeightedDiGraph build_graph(Vertex n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::vector<Edge> es = edges;
  for (const Edge& e : es) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.from) + "," +
                                  std::to_string(e.to) + ") has endpoint outside [0," +
                                  std::to_string(n) + ")");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("edge (" + std::to_string(e.from) + "," +
                                  std::to_string(e.to) + ") has invalid weight");
    }
  }
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.weight < b.weight;
  });
  // parallel arcs collapse to the minimum weight
  std::vector<Edge> dedup;
  dedup.reserve(es.size());
  for (const Edge& e : es) {
    if (!dedup.empty() && dedup.back().from == e.from && dedup.back().to == e.to) continue;
    dedup.push_back(e);
  }

  WeightedDiGraph g;
  g.n = n;
  g.edges = std::move(dedup);
  g.aspect_ratio = compute_aspect_ratio(g.edges);
  build_csr(g);
  return g;
}

InducedSubgraph induced_subgraph(const WeightedDiGraph& g, const VertexSubset& u) {
  if (u.origin_n != g.n) throw std::invalid_argument("subset does not match graph size");
  InducedSubgraph out;
  out.to_global = u.members;
  out.to_local.assign(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < u.members.size(); ++i) {
    out.to_local[static_cast<std::size_t>(u.members[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges) {
    const Vertex a = out.to_local[static_cast<std::size_t>(e.from)];
    const Vertex b = out.to_local[static_cast<std::size_t>(e.to)];
    if (a >= 0 && b >= 0) es.push_back(Edge{a, b, e.weight});
  }
  out.graph = build_graph(u.size(), es);
  return out;
}

Skeleton skeleton_from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("skeleton edge endpoint out of range");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  // drop self-loops: they carry no structure for separators
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

  Skeleton s;
  s.n = n;
  s.edges = std::move(edges);
  s.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : s.edges) {
    ++s.offsets[a + 1];
    ++s.offsets[b + 1];
  }
  for (Vertex v = 0; v < n; ++v) s.offsets[v + 1] += s.offsets[v];
  s.neighbors.resize(s.edges.size() * 2);
  std::vector<std::int64_t> pos(s.offsets.begin(), s.offsets.end() - 1);
  for (const auto& [a, b] : s.edges) {
    s.neighbors[pos[a]++] = b;
    s.neighbors[pos[b]++] = a;
  }
  return s;
}

Skeleton underlying_skeleton(const WeightedDiGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> es;
  es.reserve(g.edges.size());
  for (const Edge& e : g.edges) es.emplace_back(e.from, e.to);
  return skeleton_from_edges(g.n, std::move(es));
}

InducedSkeleton induced_skeleton(const Skeleton& g, const std::vector<Vertex>& members) {
  InducedSkeleton out;
  out.to_global = members;
  std::sort(out.to_global.begin(), out.to_global.end());
  out.to_local.assign(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < out.to_global.size(); ++i) {
    const Vertex v = out.to_global[i];
    if (v < 0 || v >= g.n) throw std::invalid_argument("skeleton member out of range");
    out.to_local[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& [a, b] : g.edges) {
    const Vertex la = out.to_local[static_cast<std::size_t>(a)];
    const Vertex lb = out.to_local[static_cast<std::size_t>(b)];
    if (la >= 0 && lb >= 0) es.emplace_back(la, lb);
  }
  out.graph = skeleton_from_edges(static_cast<Vertex>(out.to_global.size()), std::move(es));
  return out;
}

IntegerizedGraph integerize_weights(const WeightedDiGraph& g, double xi) {
  if (!(xi > 0.0) || xi > 1.0) throw std::invalid_argument("xi must be in (0,1]");
  double wmin = kInf;
  for (const Edge& e : g.edges) {
    if (e.weight > 0.0) wmin = std::min(wmin, e.weight);
  }
  IntegerizedGraph out;
  if (!std::isfinite(wmin)) {
    // all weights zero: nothing to round
    out.graph = g;
    out.unit = xi;
    out.max_weight = 0;
    return out;
  }
  out.unit = xi * wmin;
  std::vector<Edge> es;
  es.reserve(g.edges.size());
  std::int64_t max_w = 0;
  for (const Edge& e : g.edges) {
    double w = 0.0;
    if (e.weight > 0.0) {
      w = std::ceil(e.weight / wmin / xi);
      max_w = std::max(max_w, static_cast<std::int64_t>(w));
    }
    es.push_back(Edge{e.from, e.to, w});
  }
  out.graph = build_graph(g.n, es);
  out.max_weight = max_w;
  return out;
}

}  // namespace direach
