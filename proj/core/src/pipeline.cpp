#include "direach/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "direach/shortcut.hpp"

namespace direach {

const std::vector<std::pair<double, double>>& OmegaTable::knots() {
  static const std::vector<std::pair<double, double>> table = {
      {0.321334, 2.0},      {0.33, 2.000100}, {0.34, 2.000600}, {0.35, 2.001363},
      {0.40, 2.009541},     {0.45, 2.023788}, {0.50, 2.042994}, {0.527661, 2.055322},
      {0.55, 2.066134},     {0.60, 2.092631}, {0.65, 2.121734}, {0.70, 2.153048},
      {0.75, 2.186210},     {0.80, 2.220929}, {0.85, 2.256984}, {0.90, 2.294209},
      {0.95, 2.332440},     {1.00, 2.371552},
  };
  return table;
}

double omega_sigma(double sigma) {
  if (sigma < 0.0 || sigma > 1.0) throw std::invalid_argument("sigma must be in [0,1]");
  const auto& knots = OmegaTable::knots();
  if (sigma <= knots.front().first) return 2.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (sigma <= knots[i].first) {
      const auto [x0, y0] = knots[i - 1];
      const auto [x1, y1] = knots[i];
      return y0 + (y1 - y0) * (sigma - x0) / (x1 - x0);
    }
  }
  return knots.back().second;
}

QueryPlan choose_delta(double sigma, double mu) {
  if (sigma < 0.0 || sigma > 1.0) throw std::invalid_argument("sigma must be in [0,1]");
  if (mu < 0.0 || mu > 2.0) throw std::invalid_argument("mu must be in [0,2]");
  QueryPlan plan;
  plan.sigma = sigma;
  plan.mu = mu;
  const double omega = omega_sigma(sigma);
  plan.delta = std::clamp((1.0 + mu - omega) / 3.0, 0.0, 0.5);
  plan.g = (1.0 + mu + 2.0 * omega) / 3.0;
  return plan;
}

QueryPlan plan_for_graph(Vertex n, std::int64_t num_sources, std::int64_t num_edges) {
  double sigma = 0.0, mu = 0.0;
  if (n >= 2) {
    const double logn = std::log(static_cast<double>(n));
    if (num_sources > 1) sigma = std::min(1.0, std::log(static_cast<double>(num_sources)) / logn);
    if (num_edges > 1) mu = std::min(2.0, std::log(static_cast<double>(num_edges)) / logn);
  }
  QueryPlan plan = choose_delta(sigma, mu);
  if (n >= 2) {
    const double d = std::ceil(std::pow(static_cast<double>(n), plan.delta));
    const double cap = std::ceil(std::sqrt(static_cast<double>(n)));
    plan.hop_target = static_cast<int>(std::clamp(d, 1.0, cap));
  }
  return plan;
}

namespace {

BoolMatrix bool_adjacency_with_loops(const WeightedDiGraph& g) {
  BoolMatrix a = BoolMatrix::identity(g.n);
  for (const Edge& e : g.edges) a.set(e.from, e.to);
  return a;
}

/// Iterate B <- B * A up to max_products times, stopping at a fixpoint.
BoolMatrix iterate_bool(BoolMatrix b, const BoolMatrix& a, int max_products, int threads,
                        int* iterations_out) {
  int used = 0;
  for (int k = 0; k < max_products; ++k) {
    BoolMatrix next = bool_matmul(b, a, threads);
    ++used;
    if (next == b) break;
    b = std::move(next);
  }
  if (iterations_out) *iterations_out = used;
  return b;
}

}  // namespace

BoolMatrix direach(const WeightedDiGraph& g, const VertexSubset& sources, int hop_target,
                   std::uint64_t seed, int threads) {
  if (hop_target < 1) throw std::invalid_argument("hop target must be at least 1");
  if (sources.origin_n != g.n) throw std::invalid_argument("sources do not match the graph");
  const ShortcutSet h = sampling_d_shortcut(g, hop_target, seed);
  const WeightedDiGraph aug = augment(g, h);
  const BoolMatrix a = bool_adjacency_with_loops(aug);
  BoolMatrix b = rows_restrict(a, sources);
  return iterate_bool(std::move(b), a, hop_target - 1, threads, nullptr);
}

BoolMatrix direach_via_tree(const WeightedDiGraph& g, const VertexSubset& sources,
                            const DecompositionTree& t, int threads, int* iterations_out) {
  if (sources.origin_n != g.n) throw std::invalid_argument("sources do not match the graph");
  const ShortcutSet h = tree_shortcut(g, t);
  const WeightedDiGraph aug = augment(g, h);
  const BoolMatrix a = bool_adjacency_with_loops(aug);
  BoolMatrix b = rows_restrict(a, sources);
  return iterate_bool(std::move(b), a, t.hop_bound(), threads, iterations_out);
}

namespace {

DistMatrix dist_adjacency_with_loops(const WeightedDiGraph& g) {
  DistMatrix a = DistMatrix::minplus_identity(g.n);
  for (const Edge& e : g.edges) {
    const auto w = static_cast<std::int64_t>(std::llround(e.weight));
    a.at(e.from, e.to) = std::min(a.at(e.from, e.to), w);
  }
  return a;
}

}  // namespace

SxvDistances approx_sxv_distances(const WeightedDiGraph& g, const VertexSubset& sources,
                                  double epsilon, const DecompositionTree& t,
                                  const DistanceOptions& opts) {
  if (!(epsilon > 0.0) && !opts.exact) throw std::invalid_argument("epsilon must be positive");
  if (sources.origin_n != g.n) throw std::invalid_argument("sources do not match the graph");

  // Equal multiplicative share per stage: (1+a)^3 <= 1+epsilon, capped so the
  // per-stage bounds below stay valid.
  const double share =
      opts.exact ? 0.0 : std::min(1.0, std::cbrt(1.0 + epsilon) - 1.0);
  const double hopset_eps = opts.hopset_epsilon.value_or(share);
  const double integer_xi = opts.integerize_xi.value_or(share);
  const int beta = t.hop_bound();
  // (1 + 4 xi)^beta <= 1 + share for xi = share / (8 beta)
  const double product_xi = opts.product_xi.value_or(share / (8.0 * beta));

  if ((opts.exact || integer_xi == 0.0) && !g.has_integral_weights()) {
    throw std::invalid_argument("skipping weight rounding requires integral weights");
  }

  HopsetOptions hopts = opts.hopset;
  hopts.node_cap = std::max<Vertex>(hopts.node_cap, g.n);
  const HopsetBuild hopset = build_tree_hopset(g, t, hopset_eps, hopts);
  WeightedDiGraph aug = augment(g, hopset.hopset.edges);

  double unit = 1.0;
  if (integer_xi > 0.0) {
    IntegerizedGraph rounded = integerize_weights(aug, integer_xi);
    unit = rounded.unit;
    aug = std::move(rounded.graph);
  } else {
    // hopset weights are sums of integral weights, so this stays integral
    for (const Edge& e : aug.edges) {
      if (e.weight != std::floor(e.weight)) {
        throw std::logic_error("augmented graph lost weight integrality");
      }
    }
  }

  const DistMatrix a = dist_adjacency_with_loops(aug);
  DistMatrix b = rows_restrict(a, sources);
  for (int k = 0; k < beta; ++k) {
    DistMatrix next = product_xi > 0.0 ? approx_distance_product(b, a, product_xi, opts.threads)
                                       : minplus_product(b, a, opts.threads);
    if (next == b) break;
    b = std::move(next);
  }

  SxvDistances out;
  out.rows = b.rows();
  out.cols = b.cols();
  out.values.resize(static_cast<std::size_t>(out.rows) * out.cols, kInf);
  for (Vertex i = 0; i < out.rows; ++i) {
    for (Vertex j = 0; j < out.cols; ++j) {
      const std::int64_t e = b.at(i, j);
      if (e != DistMatrix::kInfEntry) {
        out.values[static_cast<std::size_t>(i) * out.cols + j] = static_cast<double>(e) * unit;
      }
    }
  }
  return out;
}

}  // namespace direach
