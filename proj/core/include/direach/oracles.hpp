#pragma once

#include <vector>

#include "direach/graph.hpp"
#include "direach/matrix.hpp"

namespace direach {

/// Per-vertex distances from a single source; infinity for unreachable.
struct DistanceVector {
  Vertex source = 0;
  std::vector<double> dist;
};

/// Vertices reachable from s, including s itself.
VertexSubset bfs_reach(const WeightedDiGraph& g, Vertex s);

/// Exact single-source distances over non-negative weights.
DistanceVector dijkstra(const WeightedDiGraph& g, Vertex s);

/// Bellman-Ford truncated at k relaxation rounds: shortest path using at most
/// k edges. Equals dijkstra for k >= n - 1.
DistanceVector k_bounded_distances(const WeightedDiGraph& g, Vertex s, int k);

/// Boolean closure by repeated squaring of A + I. Guarded by a size cap to
/// keep accidental O(n^2) blowups out of test runs.
BoolMatrix transitive_closure(const WeightedDiGraph& g, Vertex cap = 512);

/// Hop distances (edge counts) from s, -1 for unreachable.
std::vector<int> hop_distances(const WeightedDiGraph& g, Vertex s);

}  // namespace direach
