#include "direach/hopset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "direach/oracles.hpp"

namespace direach {

namespace {

void floyd_warshall(std::vector<double>& d, std::size_t k) {
  for (std::size_t mid = 0; mid < k; ++mid) {
    for (std::size_t i = 0; i < k; ++i) {
      const double dim = d[i * k + mid];
      if (dim == kInf) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const double cand = dim + d[mid * k + j];
        if (cand < d[i * k + j]) d[i * k + j] = cand;
      }
    }
  }
}

void apply_stretch(std::vector<double>& d, double xi_node) {
  if (xi_node <= 0.0) return;
  const double factor = 1.0 + xi_node;
  for (double& v : d) {
    if (v != kInf) v *= factor;
  }
}

std::vector<Vertex> sorted_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

int NodeEstimates::key_index(Vertex v) const {
  const auto it = std::lower_bound(keys.begin(), keys.end(), v);
  if (it == keys.end() || *it != v) return -1;
  return static_cast<int>(it - keys.begin());
}

std::vector<double> node_apasp(const WeightedDiGraph& gt, double xi_node, Vertex node_cap) {
  if (gt.n > node_cap) {
    throw std::invalid_argument("node graph exceeds the per-node size cap");
  }
  if (xi_node < 0.0) throw std::invalid_argument("xi_node must be non-negative");
  const std::size_t k = static_cast<std::size_t>(gt.n);
  std::vector<double> d(k * k, kInf);
  for (std::size_t i = 0; i < k; ++i) d[i * k + i] = 0.0;
  for (const Edge& e : gt.edges) {
    double& slot = d[static_cast<std::size_t>(e.from) * k + static_cast<std::size_t>(e.to)];
    slot = std::min(slot, e.weight);
  }
  floyd_warshall(d, k);
  apply_stretch(d, xi_node);
  return d;
}

namespace {

NodeEstimates leaf_estimates(const WeightedDiGraph& g, const DecompositionTree& t, int node,
                             double xi_node, Vertex node_cap) {
  const auto& vset = t.nodes[static_cast<std::size_t>(node)].vset;
  const InducedSubgraph sub = induced_subgraph(g, vset);
  NodeEstimates est;
  est.node = node;
  est.keys = vset.members;  // induced subgraph keeps the sorted order
  est.table = node_apasp(sub.graph, xi_node, node_cap);
  return est;
}

}  // namespace

NodeEstimates process_node(const DecompositionTree& t, int node, const NodeEstimates& first,
                           const NodeEstimates& second, double xi_node) {
  const auto& nd = t.nodes[static_cast<std::size_t>(node)];
  const std::vector<Vertex>& sep = nd.sep.members;
  const std::vector<Vertex> keys = sorted_union(sep, nd.boundary.members);
  const std::size_t k = keys.size();
  const std::size_t s = sep.size();

  const NodeEstimates* children[2] = {&first, &second};
  auto child_value = [&](Vertex u, Vertex v) {
    double best = kInf;
    for (const NodeEstimates* c : children) {
      const int iu = c->key_index(u);
      const int iv = c->key_index(v);
      if (iu >= 0 && iv >= 0) best = std::min(best, c->get(iu, iv));
    }
    return best;
  };

  // Step 1: complete graph on the separator, weighted by the better of the
  // two child estimates; then all-pairs on it.
  std::vector<int> sep_in_first(s), sep_in_second(s);
  for (std::size_t i = 0; i < s; ++i) {
    sep_in_first[i] = first.key_index(sep[i]);
    sep_in_second[i] = second.key_index(sep[i]);
    if (sep_in_first[i] < 0 || sep_in_second[i] < 0) {
      throw std::logic_error("separator vertex missing from a child estimate table");
    }
  }
  std::vector<double> delta_s(s * s, kInf);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      delta_s[i * s + j] = std::min(first.get(sep_in_first[i], sep_in_first[j]),
                                    second.get(sep_in_second[i], sep_in_second[j]));
    }
  }
  floyd_warshall(delta_s, s);
  apply_stretch(delta_s, xi_node);

  // Step 2: boundary-separator graph with arcs B x S, S x S, S x B.
  std::vector<int> sep_pos(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    const auto it = std::lower_bound(sep.begin(), sep.end(), keys[i]);
    if (it != sep.end() && *it == keys[i]) sep_pos[i] = static_cast<int>(it - sep.begin());
  }
  std::vector<double> delta_bs(k * k, kInf);
  for (std::size_t i = 0; i < k; ++i) delta_bs[i * k + i] = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const bool i_in_s = sep_pos[i] >= 0;
      const bool j_in_s = sep_pos[j] >= 0;
      if (i_in_s && j_in_s) {
        delta_bs[i * k + j] = delta_s[static_cast<std::size_t>(sep_pos[i]) * s + sep_pos[j]];
      } else if (i_in_s || j_in_s) {
        delta_bs[i * k + j] = child_value(keys[i], keys[j]);
      }
    }
  }
  floyd_warshall(delta_bs, k);
  apply_stretch(delta_bs, xi_node);

  // Final estimates: separator pairs keep the step-1 values; everything else
  // takes the best of the child estimate and the route through the separator.
  NodeEstimates est;
  est.node = node;
  est.keys = keys;
  est.table.assign(k * k, kInf);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double value;
      if (sep_pos[i] >= 0 && sep_pos[j] >= 0) {
        value = delta_s[static_cast<std::size_t>(sep_pos[i]) * s + sep_pos[j]];
      } else {
        value = std::min(delta_bs[i * k + j], child_value(keys[i], keys[j]));
      }
      est.table[i * k + j] = value;
    }
  }
  return est;
}

HopsetBuild build_tree_hopset(const WeightedDiGraph& g, const DecompositionTree& t,
                               double epsilon, const HopsetOptions& opts) {
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be non-negative");
  if (t.root < 0) throw std::invalid_argument("empty decomposition tree");

  HopsetBuild out;
  out.xi_node = epsilon > 0.0 ? epsilon / (6.0 * (t.depth() + 1)) : 0.0;

  // children before parents
  std::vector<int> order;
  order.reserve(t.nodes.size());
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const auto& nd = t.nodes[static_cast<std::size_t>(id)];
    if (!nd.is_leaf()) {
      stack.push_back(nd.child_a);
      stack.push_back(nd.child_b);
    }
  }
  std::reverse(order.begin(), order.end());

  std::vector<NodeEstimates> tables(t.nodes.size());
  std::map<std::pair<Vertex, Vertex>, double> best;
  for (const int id : order) {
    const auto& nd = t.nodes[static_cast<std::size_t>(id)];
    if (nd.is_leaf()) {
      tables[static_cast<std::size_t>(id)] = leaf_estimates(g, t, id, out.xi_node, opts.node_cap);
    } else {
      tables[static_cast<std::size_t>(id)] =
          process_node(t, id, tables[static_cast<std::size_t>(nd.child_a)],
                       tables[static_cast<std::size_t>(nd.child_b)], out.xi_node);
    }
    const NodeEstimates& est = tables[static_cast<std::size_t>(id)];
    const std::size_t k = est.keys.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const double w = est.get(static_cast<int>(i), static_cast<int>(j));
        if (w == kInf) continue;
        const auto key = std::make_pair(est.keys[i], est.keys[j]);
        const auto it = best.find(key);
        if (it == best.end() || w < it->second) best[key] = w;
      }
    }
    // free child tables unless the caller wants them all
    if (!opts.keep_node_tables && !nd.is_leaf()) {
      tables[static_cast<std::size_t>(nd.child_a)] = NodeEstimates{};
      tables[static_cast<std::size_t>(nd.child_b)] = NodeEstimates{};
    }
  }

  out.hopset.epsilon = epsilon;
  out.hopset.hopbound = t.hop_bound();
  out.hopset.edges.reserve(best.size());
  for (const auto& [key, w] : best) {
    out.hopset.edges.push_back(HopsetEdge{key.first, key.second, w});
  }
  if (opts.keep_node_tables) out.node_tables = std::move(tables);
  return out;
}

HopsetSet tree_hopset(const WeightedDiGraph& g, const DecompositionTree& t, double epsilon) {
  return build_tree_hopset(g, t, epsilon).hopset;
}

WeightedDiGraph augment(const WeightedDiGraph& g, const std::vector<HopsetEdge>& edges) {
  std::vector<Edge> all = g.edges;
  all.reserve(all.size() + edges.size());
  for (const HopsetEdge& e : edges) all.push_back(Edge{e.from, e.to, e.weight});
  return build_graph(g.n, all);
}

HopsetCertificate certify_hopset(const WeightedDiGraph& g, const HopsetSet& h) {
  const WeightedDiGraph aug = augment(g, h.edges);
  HopsetCertificate cert;
  const double tol = 1e-9;
  for (Vertex s = 0; s < g.n; ++s) {
    const DistanceVector exact = dijkstra(g, s);
    const DistanceVector bounded = k_bounded_distances(aug, s, h.hopbound);
    for (Vertex v = 0; v < g.n; ++v) {
      const double d = exact.dist[static_cast<std::size_t>(v)];
      if (d == kInf) continue;
      ++cert.reachable_pairs;
      const double db = bounded.dist[static_cast<std::size_t>(v)];
      bool bad = false;
      if (db == kInf || db < d - tol * std::max(1.0, d)) bad = true;
      const double limit = (1.0 + h.epsilon) * d;
      if (db > limit + tol * std::max(1.0, limit)) bad = true;
      if (bad) ++cert.violations;
      if (d > 0 && db != kInf) cert.max_stretch = std::max(cert.max_stretch, db / d);
    }
  }
  cert.ok = cert.violations == 0;
  return cert;
}

}  // namespace direach
