#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "direach/decomposition.hpp"
#include "direach/graph.hpp"

namespace direach {

struct ShortcutSet {
  std::vector<std::pair<Vertex, Vertex>> edges;  // sorted, subset of TC(G) \ E
  int target_hopbound = 0;                       // D
};

/// Randomized diameter reduction: samples about 3 n ln(n) / D pivots and
/// connects each pivot to and from everything it can reach, so any pair more
/// than D hops apart gains a two-hop route with probability >= 1 - 1/n.
ShortcutSet sampling_d_shortcut(const WeightedDiGraph& g, int hop_target, std::uint64_t seed);

/// True iff every pair reachable in G is within at most D hops in G + H.
bool verify_hop_diameter(const WeightedDiGraph& g, const ShortcutSet& h, int hop_target);

/// Largest hop count over reachable pairs in G + H (0 when nothing is
/// reachable).
int measure_hop_diameter(const WeightedDiGraph& g, const ShortcutSet& h);

/// Separator-tree shortcut: per tree node, a direct arc for every reachable
/// pair of that node's pair set. Hop diameter of G + H is at most
/// 2 depth(T) + 2.
ShortcutSet tree_shortcut(const WeightedDiGraph& g, const DecompositionTree& t);

/// G with the shortcut arcs added (weight 1 on new arcs).
WeightedDiGraph augment(const WeightedDiGraph& g, const ShortcutSet& h);

}  // namespace direach
