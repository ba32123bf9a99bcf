#pragma once

#include <functional>
#include <vector>

#include "direach/graph.hpp"

namespace direach {

/// A balanced vertex separator: sep, part_a, part_b partition the vertex set
/// and no skeleton edge crosses part_a x part_b. `ratio` is the achieved
/// max(|A|,|B|) / n.
struct SeparatorResult {
  VertexSubset sep;
  VertexSubset part_a;
  VertexSubset part_b;
  double ratio = 0.0;
};

enum class SeparatorStrategy { kExhaustive, kGrid, kBfsHeuristic };

struct SeparatorOptions {
  SeparatorStrategy strategy = SeparatorStrategy::kBfsHeuristic;
  double ratio = 2.0 / 3.0;  // balance bound lambda

  // kGrid: declared dimensions of the original grid; vertex id = row*cols+col.
  int grid_rows = 0;
  int grid_cols = 0;

  // kExhaustive enumerates all separators for n <= 20. Larger inputs are
  // allowed but the search is capped at this separator size.
  int exhaustive_size_cap = 6;
};

/// Strategy-backed separator search. `global_ids[i]` is the identity of local
/// vertex i in the frame the strategy options refer to (only the grid
/// strategy reads it). The exhaustive strategy returns a minimum-size,
/// most-balanced separator or throws if none fits the ratio; the other
/// strategies are best-effort and may return a result with one empty part.
SeparatorResult find_separator(const Skeleton& g, const SeparatorOptions& opts,
                               const std::vector<Vertex>& global_ids);
SeparatorResult find_separator(const Skeleton& g, const SeparatorOptions& opts);

using SeparatorFinder =
    std::function<SeparatorResult(const Skeleton&, const std::vector<Vertex>&)>;

SeparatorFinder make_finder(const SeparatorOptions& opts);

/// One iteration snapshot of the rebalancing loop (index 0 is the initial
/// state A=B=C=empty, D=V).
struct BalanceStep {
  std::vector<Vertex> a, b, c, d;
};

struct HalfSeparator {
  VertexSubset part_a;  // |A| <= |B| <= |A| + |C|, both <= ceil(n/2)
  VertexSubset part_b;
  VertexSubset sep;
  std::vector<BalanceStep> steps;
};

/// Rebalances ratio-lambda separators into a ratio-1/2 separator by the
/// shrinking-remainder loop; the returned trace lets callers check the loop
/// invariants.
HalfSeparator balance_to_half(const Skeleton& g, const SeparatorFinder& finder);

/// Moves separator vertices with neighbors on only one side (or neither side)
/// into the parts until every remaining separator vertex touches both parts.
SeparatorResult make_doubly_incident(const Skeleton& g, const SeparatorResult& in);

}  // namespace direach
