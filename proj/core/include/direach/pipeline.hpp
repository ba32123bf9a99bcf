#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "direach/decomposition.hpp"
#include "direach/graph.hpp"
#include "direach/hopset.hpp"
#include "direach/matrix.hpp"

namespace direach {

/// Piecewise-linear upper bounds on the rectangular matrix multiplication
/// exponent: omega(sigma) bounds the cost exponent of multiplying an
/// n^sigma x n matrix by an n x n matrix.
struct OmegaTable {
  static constexpr double kDualExponent = 0.321334;  // alpha: largest sigma with omega = 2
  static constexpr double kOmega = 2.371552;         // omega(1)

  /// Knots (sigma, omega(sigma)); convex and non-decreasing.
  static const std::vector<std::pair<double, double>>& knots();
};

/// omega(sigma): 2 up to the dual exponent, then linear interpolation
/// between the table knots.
double omega_sigma(double sigma);

struct QueryPlan {
  double sigma = 0.0;  // log_n |S|
  double mu = 0.0;     // log_n m
  double delta = 0.0;  // shortcut exponent, in [0, 1/2]
  int hop_target = 1;  // D = ceil(n^delta), clamped to ceil(sqrt(n))
  double g = 0.0;      // predicted running-time exponent
};

/// delta = (1 + mu - omega(sigma)) / 3 clamped to [0, 1/2] and
/// g = (1 + mu + 2 omega(sigma)) / 3. The hop target is left at 1 until a
/// graph size is known.
QueryPlan choose_delta(double sigma, double mu);

/// Plan for a concrete instance: sigma and mu from |S| and m, D = ceil(n^delta)
/// clamped into [1, ceil(sqrt(n))].
QueryPlan plan_for_graph(Vertex n, std::int64_t num_sources, std::int64_t num_edges);

/// S x V reachability via a sampled D-shortcut and repeated Boolean products
/// against A + I. Row i marks everything reachable from S[i].
BoolMatrix direach(const WeightedDiGraph& g, const VertexSubset& sources, int hop_target,
                   std::uint64_t seed, int threads = 1);

/// Same contract through a separator-decomposition shortcut; products stop at
/// the first fixpoint and never exceed 2 depth(T) + 2 iterations.
BoolMatrix direach_via_tree(const WeightedDiGraph& g, const VertexSubset& sources,
                            const DecompositionTree& t, int threads = 1,
                            int* iterations_out = nullptr);

struct SxvDistances {
  Vertex rows = 0;
  Vertex cols = 0;
  std::vector<double> values;  // row-major, kInf for unreachable

  double at(Vertex i, Vertex j) const {
    return values[static_cast<std::size_t>(i) * cols + j];
  }
};

struct DistanceOptions {
  int threads = 1;
  /// Run every stage exact (needs integral weights): hopset with exact
  /// per-node tables, no weight rounding, exact min-plus products.
  bool exact = false;
  /// Overrides for the per-stage budgets; by default each of the three
  /// stages (hopset, rounding, products) gets an equal multiplicative share
  /// a with (1+a)^3 = 1+epsilon.
  std::optional<double> hopset_epsilon;
  std::optional<double> integerize_xi;
  std::optional<double> product_xi;
  HopsetOptions hopset;
};

/// (1+epsilon)-approximate S x V distances: build a hopset over the tree,
/// round weights up to integers, then iterate approximate distance products
/// of the source rows against the augmented adjacency matrix. Estimates are
/// returned in original weight units and never undershoot the true distance.
SxvDistances approx_sxv_distances(const WeightedDiGraph& g, const VertexSubset& sources,
                                  double epsilon, const DecompositionTree& t,
                                  const DistanceOptions& opts = {});

}  // namespace direach
