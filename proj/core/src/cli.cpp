#include "direach/cli.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "direach/decomposition.hpp"
#include "direach/hopset.hpp"
#include "direach/io.hpp"
#include "direach/oracles.hpp"
#include "direach/pipeline.hpp"
#include "direach/separator.hpp"
#include "direach/shortcut.hpp"

namespace direach {

namespace {

using nlohmann::json;

VertexSubset resolve_sources(const RunConfig& cfg, Vertex n) {
  if (!cfg.sources.empty()) return make_subset(cfg.sources, n);
  if (cfg.random_sources > 0) {
    if (cfg.random_sources > n) {
      throw std::invalid_argument("asked for more random sources than vertices");
    }
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.random_sources; ++i) {
      const auto j = i + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(cfg.random_sources));
    return make_subset(std::move(pool), n);
  }
  return VertexSubset{{}, n};
}

SeparatorFinder finder_from_config(const RunConfig& cfg) {
  SeparatorOptions opts;
  opts.ratio = cfg.ratio;
  if (cfg.strategy == "exhaustive") {
    opts.strategy = SeparatorStrategy::kExhaustive;
  } else if (cfg.strategy == "grid") {
    opts.strategy = SeparatorStrategy::kGrid;
    opts.grid_rows = cfg.grid_rows;
    opts.grid_cols = cfg.grid_cols;
  } else if (cfg.strategy == "bfs") {
    opts.strategy = SeparatorStrategy::kBfsHeuristic;
  } else {
    throw std::invalid_argument("unknown separator strategy: " + cfg.strategy);
  }
  SeparatorFinder base = make_finder(opts);
  if (!cfg.rebalance) return base;
  return [base](const Skeleton& g, const std::vector<Vertex>& ids) {
    const HalfSeparator half = balance_to_half(
        g, [&](const Skeleton& sub, const std::vector<Vertex>& sub_ids) {
          std::vector<Vertex> mapped;
          mapped.reserve(sub_ids.size());
          for (Vertex v : sub_ids) mapped.push_back(ids[static_cast<std::size_t>(v)]);
          return base(sub, mapped);
        });
    SeparatorResult res;
    res.part_a = half.part_a;
    res.part_b = half.part_b;
    res.sep = half.sep;
    res.ratio = g.n > 0 ? static_cast<double>(std::max(half.part_a.size(), half.part_b.size())) /
                              g.n
                        : 0.0;
    return res;
  };
}

DecompositionTree tree_for(const RunConfig& cfg, const WeightedDiGraph& g) {
  const Skeleton skeleton = underlying_skeleton(g);
  if (!cfg.tree_path.empty()) {
    DecompositionTree t = load_tree(cfg.tree_path);
    const TreeCheck check = validate_tree(skeleton, t);
    if (!check.ok) throw std::runtime_error("imported tree rejected: " + check.message);
    return t;
  }
  return build_decomposition_tree(skeleton, finder_from_config(cfg), cfg.tau);
}

json plan_json(const QueryPlan& plan) {
  return json{{"sigma", plan.sigma},
              {"mu", plan.mu},
              {"delta", plan.delta},
              {"D", plan.hop_target},
              {"g", plan.g}};
}

json base_doc(const RunConfig& cfg, const WeightedDiGraph& g, const VertexSubset& sources) {
  json doc;
  doc["schema"] = 1;
  doc["command"] = cfg.command;
  doc["n"] = g.n;
  doc["m"] = g.edge_count();
  doc["seed"] = cfg.seed;
  doc["sources"] = sources.members;
  doc["plan"] = plan_json(plan_for_graph(g.n, sources.size(), g.edge_count()));
  return doc;
}

json rows_json(const BoolMatrix& rows) {
  json out = json::array();
  for (Vertex i = 0; i < rows.rows(); ++i) {
    json row = json::array();
    for (Vertex j = 0; j < rows.cols(); ++j) row.push_back(rows.get(i, j) ? 1 : 0);
    out.push_back(std::move(row));
  }
  return out;
}

CommandResult cmd_reach(const RunConfig& cfg) {
  const WeightedDiGraph g = parse_edge_list(cfg.input_path, cfg.one_indexed);
  const VertexSubset sources = resolve_sources(cfg, g.n);
  if (sources.empty()) throw std::invalid_argument("reach needs at least one source");
  json doc = base_doc(cfg, g, sources);

  BoolMatrix rows;
  if (!cfg.tree_path.empty()) {
    const DecompositionTree t = tree_for(cfg, g);
    int iterations = 0;
    rows = direach_via_tree(g, sources, t, cfg.threads, &iterations);
    doc["mode"] = "tree";
    doc["beta"] = t.hop_bound();
    doc["iterations"] = iterations;
  } else {
    const int d = cfg.hops > 0 ? cfg.hops : doc["plan"]["D"].get<int>();
    rows = direach(g, sources, d, cfg.seed, cfg.threads);
    doc["mode"] = "sampling";
    doc["D"] = d;
  }
  doc["rows"] = rows_json(rows);
  return CommandResult{0, doc.dump(2) + "\n", {}};
}

CommandResult cmd_dist(const RunConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("dist needs --epsilon > 0");
  const WeightedDiGraph g = parse_edge_list(cfg.input_path, cfg.one_indexed);
  const VertexSubset sources = resolve_sources(cfg, g.n);
  if (sources.empty()) throw std::invalid_argument("dist needs at least one source");
  const DecompositionTree t = tree_for(cfg, g);

  DistanceOptions opts;
  opts.threads = cfg.threads;
  const SxvDistances est = approx_sxv_distances(g, sources, cfg.epsilon, t, opts);

  json doc = base_doc(cfg, g, sources);
  doc["epsilon"] = cfg.epsilon;
  doc["beta"] = t.hop_bound();
  doc["tree_depth"] = t.depth();
  json rows = json::array();
  for (Vertex i = 0; i < est.rows; ++i) {
    json row = json::array();
    for (Vertex j = 0; j < est.cols; ++j) {
      const double v = est.at(i, j);
      if (v == kInf) {
        row.push_back(nullptr);
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  doc["estimates"] = std::move(rows);
  return CommandResult{0, doc.dump(2) + "\n", {}};
}

CommandResult cmd_shortcut(const RunConfig& cfg) {
  const WeightedDiGraph g = parse_edge_list(cfg.input_path, cfg.one_indexed);
  const VertexSubset sources = resolve_sources(cfg, g.n);
  json doc = base_doc(cfg, g, sources);
  const int d = cfg.hops > 0 ? cfg.hops : doc["plan"]["D"].get<int>();

  const ShortcutSet h = sampling_d_shortcut(g, d, cfg.seed);
  doc["D"] = d;
  doc["edge_count"] = h.edges.size();
  doc["hop_diameter"] = measure_hop_diameter(g, h);
  doc["certified"] = verify_hop_diameter(g, h, d);
  json edges = json::array();
  for (const auto& [u, v] : h.edges) edges.push_back(json::array({u, v}));
  doc["edges"] = std::move(edges);
  return CommandResult{0, doc.dump(2) + "\n", shortcut_to_text(h)};
}

CommandResult cmd_hopset(const RunConfig& cfg) {
  if (!(cfg.epsilon >= 0.0)) throw std::invalid_argument("hopset needs --epsilon >= 0");
  const WeightedDiGraph g = parse_edge_list(cfg.input_path, cfg.one_indexed);
  const VertexSubset sources = resolve_sources(cfg, g.n);
  const DecompositionTree t = tree_for(cfg, g);
  const HopsetSet h = tree_hopset(g, t, cfg.epsilon);

  json doc = base_doc(cfg, g, sources);
  doc["epsilon"] = cfg.epsilon;
  doc["beta"] = h.hopbound;
  doc["tree_depth"] = t.depth();
  doc["edge_count"] = h.edges.size();
  if (g.n <= 2048) {
    const HopsetCertificate cert = certify_hopset(g, h);
    doc["stats"] = json{{"reachable_pairs", cert.reachable_pairs},
                        {"violations", cert.violations},
                        {"max_stretch", cert.max_stretch},
                        {"ok", cert.ok}};
  }
  json edges = json::array();
  for (const HopsetEdge& e : h.edges) edges.push_back(json::array({e.from, e.to, e.weight}));
  doc["edges"] = std::move(edges);
  return CommandResult{0, doc.dump(2) + "\n", hopset_to_text(h)};
}

CommandResult cmd_decompose(const RunConfig& cfg) {
  const WeightedDiGraph g = parse_edge_list(cfg.input_path, cfg.one_indexed);
  const Skeleton skeleton = underlying_skeleton(g);
  const DecompositionTree t =
      build_decomposition_tree(skeleton, finder_from_config(cfg), cfg.tau);
  const TreeCheck check = validate_tree(skeleton, t);
  if (!check.ok) throw std::runtime_error("built tree failed validation: " + check.message);
  return CommandResult{0, tree_to_json(t) + "\n", {}};
}

CommandResult cmd_bench(const RunConfig& cfg) {
  const WeightedDiGraph g = parse_edge_list(cfg.input_path, cfg.one_indexed);
  const VertexSubset sources = resolve_sources(cfg, g.n);
  if (sources.empty()) throw std::invalid_argument("bench needs at least one source");
  const QueryPlan plan = plan_for_graph(g.n, sources.size(), g.edge_count());
  const int d = cfg.hops > 0 ? cfg.hops : plan.hop_target;

  using Clock = std::chrono::steady_clock;
  const auto ms = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };

  const auto t0 = Clock::now();
  const ShortcutSet h = sampling_d_shortcut(g, d, cfg.seed);
  const WeightedDiGraph aug = augment(g, h);
  const auto t1 = Clock::now();

  BoolMatrix a = BoolMatrix::identity(g.n);
  for (const Edge& e : aug.edges) a.set(e.from, e.to);
  BoolMatrix b = rows_restrict(a, sources);
  for (int k = 0; k < d - 1; ++k) {
    BoolMatrix next = bool_matmul(b, a, cfg.threads);
    if (next == b) break;
    b = std::move(next);
  }
  const auto t2 = Clock::now();

  // the naive baseline: one BFS per source
  std::int64_t reached = 0;
  for (const Vertex s : sources.members) reached += bfs_reach(g, s).size();
  const auto t3 = Clock::now();

  std::ostringstream csv;
  csv << "n,m,sources,D,build_ms,query_ms,oracle_ms\n";
  csv << g.n << "," << g.edge_count() << "," << sources.size() << "," << d << "," << ms(t0, t1)
      << "," << ms(t1, t2) << "," << ms(t2, t3) << "\n";
  (void)reached;
  return CommandResult{0, csv.str(), {}};
}

}  // namespace

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.threads < 1) throw std::invalid_argument("--threads must be at least 1");
  if (cfg.command == "reach") return cmd_reach(cfg);
  if (cfg.command == "dist") return cmd_dist(cfg);
  if (cfg.command == "shortcut") return cmd_shortcut(cfg);
  if (cfg.command == "hopset") return cmd_hopset(cfg);
  if (cfg.command == "decompose") return cmd_decompose(cfg);
  if (cfg.command == "bench") return cmd_bench(cfg);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace direach
