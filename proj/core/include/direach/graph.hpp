#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace direach {

using Vertex = std::int32_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  double weight = 1.0;
};

/// Immutable directed graph with non-negative weights and CSR adjacency in
/// both directions. Parallel edges are collapsed to the minimum weight at
/// build time; `aspect_ratio` is max/min over the non-zero weights.
struct WeightedDiGraph {
  Vertex n = 0;
  std::vector<Edge> edges;  // sorted by (from, to), no duplicates

  std::vector<std::int64_t> out_offsets;
  std::vector<Vertex> out_targets;
  std::vector<double> out_weights;

  std::vector<std::int64_t> in_offsets;
  std::vector<Vertex> in_sources;
  std::vector<double> in_weights;

  double aspect_ratio = 1.0;

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }

  std::int64_t out_degree(Vertex u) const { return out_offsets[u + 1] - out_offsets[u]; }
  std::int64_t in_degree(Vertex u) const { return in_offsets[u + 1] - in_offsets[u]; }

  bool has_integral_weights() const;
};

/// Sorted set of vertex ids taken from a graph with `origin_n` vertices.
struct VertexSubset {
  std::vector<Vertex> members;  // ascending, distinct
  Vertex origin_n = 0;

  Vertex size() const { return static_cast<Vertex>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(Vertex v) const;
};

VertexSubset make_subset(std::vector<Vertex> members, Vertex origin_n);
VertexSubset full_subset(Vertex n);

WeightedDiGraph build_graph(Vertex n, const std::vector<Edge>& edges);

struct InducedSubgraph {
  WeightedDiGraph graph;
  std::vector<Vertex> to_global;  // local id -> original id
  std::vector<Vertex> to_local;   // original id -> local id, -1 if absent
};

InducedSubgraph induced_subgraph(const WeightedDiGraph& g, const VertexSubset& u);

/// Undirected unweighted skeleton: {u,v} present iff (u,v) or (v,u) is an arc.
struct Skeleton {
  Vertex n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted, unique
  std::vector<std::int64_t> offsets;
  std::vector<Vertex> neighbors;

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
  std::int64_t degree(Vertex u) const { return offsets[u + 1] - offsets[u]; }
};

Skeleton underlying_skeleton(const WeightedDiGraph& g);
Skeleton skeleton_from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges);

struct InducedSkeleton {
  Skeleton graph;
  std::vector<Vertex> to_global;
  std::vector<Vertex> to_local;
};

InducedSkeleton induced_skeleton(const Skeleton& g, const std::vector<Vertex>& members);

/// Result of rounding weights up to integer multiples of `unit`. For any
/// pair, unit * d_int lies in [d_original, (1+xi) * d_original].
struct IntegerizedGraph {
  WeightedDiGraph graph;  // integral weights in {ceil(1/xi), ..., M}, zeros kept
  double unit = 1.0;      // xi * (min non-zero weight of the input)
  std::int64_t max_weight = 0;  // M
};

IntegerizedGraph integerize_weights(const WeightedDiGraph& g, double xi);

}  // namespace direach
