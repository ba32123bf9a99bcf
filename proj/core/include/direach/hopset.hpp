#pragma once

#include <cstdint>
#include <vector>

#include "direach/decomposition.hpp"
#include "direach/graph.hpp"

namespace direach {

struct HopsetEdge {
  Vertex from = 0;
  Vertex to = 0;
  double weight = 0.0;  // distance estimate, never below d_G(from, to)
};

struct HopsetSet {
  std::vector<HopsetEdge> edges;  // sorted by (from, to)
  double epsilon = 0.0;
  int hopbound = 0;  // beta = 2 * depth(T) + 2
};

/// Distance estimates held at one tree node, as a dense table over `keys`
/// (S(t) + B(t) for internal nodes, V(t) at leaves).
struct NodeEstimates {
  int node = -1;
  std::vector<Vertex> keys;   // sorted global vertex ids
  std::vector<double> table;  // keys.size()^2 row-major, kInf if unreachable

  int key_index(Vertex v) const;
  double get(int i, int j) const {
    return table[static_cast<std::size_t>(i) * keys.size() + static_cast<std::size_t>(j)];
  }
};

/// Exact all-pairs distances (Floyd-Warshall) inflated entrywise by
/// (1 + xi_node); xi_node = 0 gives exact APSP.
std::vector<double> node_apasp(const WeightedDiGraph& gt, double xi_node,
                               Vertex node_cap = 1024);

/// Combines the two children's estimate tables into the parent's: distances
/// inside the separator first, then routes through it for boundary pairs.
NodeEstimates process_node(const DecompositionTree& t, int node, const NodeEstimates& first,
                           const NodeEstimates& second, double xi_node);

struct HopsetOptions {
  Vertex node_cap = 1024;
  bool keep_node_tables = false;
};

struct HopsetBuild {
  HopsetSet hopset;
  double xi_node = 0.0;
  std::vector<NodeEstimates> node_tables;  // filled when keep_node_tables is set
};

HopsetBuild build_tree_hopset(const WeightedDiGraph& g, const DecompositionTree& t,
                               double epsilon, const HopsetOptions& opts = {});

/// Separator-tree hopset with per-node stretch (1 + xi_node)^(3 (level + 1)),
/// xi_node = epsilon / (6 (depth + 1)).
HopsetSet tree_hopset(const WeightedDiGraph& g, const DecompositionTree& t, double epsilon);

/// Graph augmented with the hopset edges (parallel arcs keep the minimum).
WeightedDiGraph augment(const WeightedDiGraph& g, const std::vector<HopsetEdge>& edges);

struct HopsetCertificate {
  std::int64_t reachable_pairs = 0;
  std::int64_t violations = 0;
  double max_stretch = 1.0;  // max d_beta / d over reachable pairs
  bool ok = true;
};

/// Checks d_G <= d^(beta) in G+H <= (1+epsilon) d_G for every reachable pair,
/// via hop-bounded Bellman-Ford against a Dijkstra baseline.
HopsetCertificate certify_hopset(const WeightedDiGraph& g, const HopsetSet& h);

}  // namespace direach
