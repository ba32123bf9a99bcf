#pragma once

#include <string>
#include <vector>

#include "direach/graph.hpp"
#include "direach/separator.hpp"

namespace direach {

struct DecompositionNode {
  VertexSubset vset;      // V(t), original vertex ids
  VertexSubset sep;       // S(t), empty at leaves
  VertexSubset boundary;  // B(t) = S(parent) united with inherited boundary
  int level = 0;          // depth of the subtree rooted here, 0 at leaves
  int child_a = -1;
  int child_b = -1;
  double ratio = 0.0;     // balance achieved by the split, 0 at leaves
  bool oversized = false; // leaf larger than tau (node the finder could not split)

  bool is_leaf() const { return child_a < 0; }
};

/// Binary separator decomposition tree. Children of t carry
/// V(t_i) = U_i + S(t) and B(t_i) = S(t) + (B(t) intersect V(t_i)).
struct DecompositionTree {
  Vertex n = 0;
  int tau = 0;
  int root = -1;
  std::vector<DecompositionNode> nodes;

  int depth() const { return root >= 0 ? nodes[static_cast<std::size_t>(root)].level : 0; }
  /// Hop budget used by the tree-based pipelines.
  int hop_bound() const { return 2 * depth() + 2; }
};

/// Recursively splits the skeleton until nodes have at most tau vertices.
/// Separators are rewritten to be doubly incident before recursing. A node the
/// finder cannot split (one side empty) becomes an oversized leaf.
DecompositionTree build_decomposition_tree(const Skeleton& g, const SeparatorFinder& finder,
                                           int tau);

struct TreeCheck {
  bool ok = true;
  std::string message;
};

/// Structural validation of every tree invariant against a skeleton.
TreeCheck validate_tree(const Skeleton& g, const DecompositionTree& t,
                        bool allow_oversized_leaves = true);

std::string tree_to_json(const DecompositionTree& t);
DecompositionTree tree_from_json(const std::string& text);

void save_tree(const DecompositionTree& t, const std::string& path);
DecompositionTree load_tree(const std::string& path);

}  // namespace direach
