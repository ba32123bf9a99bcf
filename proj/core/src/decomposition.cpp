#include "direach/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace direach {

namespace {

using nlohmann::json;

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Builder {
  const Skeleton& g;
  const SeparatorFinder& finder;
  int tau;
  DecompositionTree tree;

  int build(std::vector<Vertex> vset, std::vector<Vertex> boundary) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[id].vset = make_subset(vset, g.n);
    tree.nodes[id].boundary = make_subset(boundary, g.n);

    if (static_cast<int>(vset.size()) <= tau) {
      tree.nodes[id].sep = make_subset({}, g.n);
      return id;
    }

    const InducedSkeleton sub = induced_skeleton(g, vset);
    SeparatorResult sr = finder(sub.graph, sub.to_global);
    sr = make_doubly_incident(sub.graph, sr);

    if (sr.part_a.empty() || sr.part_b.empty()) {
      // nothing to recurse into (dense skeletons admit no two-sided split)
      tree.nodes[id].sep = make_subset({}, g.n);
      tree.nodes[id].oversized = true;
      return id;
    }

    auto lift = [&](const VertexSubset& s) {
      std::vector<Vertex> out;
      out.reserve(s.members.size());
      for (Vertex v : s.members) out.push_back(sub.to_global[static_cast<std::size_t>(v)]);
      return out;
    };
    const std::vector<Vertex> sep = lift(sr.sep);
    std::vector<Vertex> va = lift(sr.part_a);
    std::vector<Vertex> vb = lift(sr.part_b);
    va.insert(va.end(), sep.begin(), sep.end());
    vb.insert(vb.end(), sep.begin(), sep.end());
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());

    const std::vector<Vertex>& parent_boundary = tree.nodes[id].boundary.members;
    std::vector<Vertex> ba = sep, bb = sep;
    const auto inherited_a = intersect_sorted(parent_boundary, va);
    const auto inherited_b = intersect_sorted(parent_boundary, vb);
    ba.insert(ba.end(), inherited_a.begin(), inherited_a.end());
    bb.insert(bb.end(), inherited_b.begin(), inherited_b.end());

    tree.nodes[id].sep = make_subset(sep, g.n);
    tree.nodes[id].ratio = sr.ratio;
    const int ca = build(std::move(va), std::move(ba));
    const int cb = build(std::move(vb), std::move(bb));
    tree.nodes[id].child_a = ca;
    tree.nodes[id].child_b = cb;
    tree.nodes[id].level =
        1 + std::max(tree.nodes[ca].level, tree.nodes[cb].level);
    return id;
  }
};

}  // namespace

DecompositionTree build_decomposition_tree(const Skeleton& g, const SeparatorFinder& finder,
                                           int tau) {
  if (tau < 1) throw std::invalid_argument("leaf threshold must be at least 1");
  Builder b{g, finder, tau, {}};
  b.tree.n = g.n;
  b.tree.tau = tau;
  std::vector<Vertex> all(static_cast<std::size_t>(g.n));
  for (Vertex v = 0; v < g.n; ++v) all[static_cast<std::size_t>(v)] = v;
  b.tree.root = b.build(std::move(all), {});
  return b.tree;
}

TreeCheck validate_tree(const Skeleton& g, const DecompositionTree& t,
                        bool allow_oversized_leaves) {
  auto fail = [](std::string msg) { return TreeCheck{false, std::move(msg)}; };
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size())) return fail("missing root");
  if (t.n != g.n) return fail("tree vertex count does not match the graph");

  const auto& root = t.nodes[static_cast<std::size_t>(t.root)];
  if (root.vset.size() != g.n) return fail("root vertex set must cover the graph");
  if (!root.boundary.empty()) return fail("root boundary must be empty");

  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    for (Vertex v : node.sep.members) {
      if (!node.vset.contains(v)) return fail("separator not inside the node");
    }
    for (Vertex v : node.boundary.members) {
      if (!node.vset.contains(v)) return fail("boundary not inside the node");
    }
    if (node.is_leaf()) {
      if (node.level != 0) return fail("leaf level must be 0");
      if (static_cast<int>(node.vset.size()) > t.tau && !(allow_oversized_leaves && node.oversized)) {
        return fail("leaf larger than tau");
      }
      continue;
    }
    if (node.child_a < 0 || node.child_b < 0 ||
        node.child_a >= static_cast<int>(t.nodes.size()) ||
        node.child_b >= static_cast<int>(t.nodes.size())) {
      return fail("internal node must have two children");
    }
    const auto& a = t.nodes[static_cast<std::size_t>(node.child_a)];
    const auto& b = t.nodes[static_cast<std::size_t>(node.child_b)];
    if (node.level != 1 + std::max(a.level, b.level)) return fail("bad level");

    // children are U_i + S(t); the separator is exactly their intersection
    std::vector<Vertex> inter = intersect_sorted(a.vset.members, b.vset.members);
    if (inter != node.sep.members) return fail("children must overlap exactly in the separator");

    std::vector<Vertex> uni;
    std::set_union(a.vset.members.begin(), a.vset.members.end(), b.vset.members.begin(),
                   b.vset.members.end(), std::back_inserter(uni));
    if (uni != node.vset.members) return fail("children must cover the node");

    for (const auto* child : {&a, &b}) {
      std::vector<Vertex> expected = node.sep.members;
      const auto inherited = intersect_sorted(node.boundary.members, child->vset.members);
      expected.insert(expected.end(), inherited.begin(), inherited.end());
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      if (expected != child->boundary.members) return fail("boundary recurrence violated");
    }

    // no skeleton edge between U_1 and U_2
    std::vector<int> side(static_cast<std::size_t>(g.n), -1);
    for (Vertex v : a.vset.members) side[static_cast<std::size_t>(v)] = 0;
    for (Vertex v : b.vset.members) side[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : node.sep.members) side[static_cast<std::size_t>(v)] = 2;
    for (const auto& [x, y] : g.edges) {
      const int sx = side[static_cast<std::size_t>(x)];
      const int sy = side[static_cast<std::size_t>(y)];
      if ((sx == 0 && sy == 1) || (sx == 1 && sy == 0)) {
        return fail("skeleton edge crosses the separator at node " + std::to_string(id));
      }
    }
  }
  return TreeCheck{};
}

std::string tree_to_json(const DecompositionTree& t) {
  json doc;
  doc["schema"] = 1;
  doc["kind"] = "separator-decomposition";
  doc["n"] = t.n;
  doc["tau"] = t.tau;
  doc["root"] = t.root;
  json nodes = json::array();
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    json jn;
    jn["id"] = id;
    jn["vset"] = node.vset.members;
    jn["sep"] = node.sep.members;
    jn["boundary"] = node.boundary.members;
    jn["level"] = node.level;
    if (!node.is_leaf()) {
      jn["children"] = {node.child_a, node.child_b};
    } else {
      jn["children"] = json::array();
    }
    jn["ratio"] = node.ratio;
    jn["oversized"] = node.oversized;
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2);
}

DecompositionTree tree_from_json(const std::string& text) {
  json doc = json::parse(text);
  DecompositionTree t;
  t.n = doc.at("n").get<Vertex>();
  t.tau = doc.at("tau").get<int>();
  t.root = doc.at("root").get<int>();
  const auto& nodes = doc.at("nodes");
  t.nodes.resize(nodes.size());
  for (const auto& jn : nodes) {
    const auto id = jn.at("id").get<std::size_t>();
    if (id >= t.nodes.size()) throw std::invalid_argument("node id out of range in tree file");
    DecompositionNode& node = t.nodes[id];
    node.vset = make_subset(jn.at("vset").get<std::vector<Vertex>>(), t.n);
    node.sep = make_subset(jn.at("sep").get<std::vector<Vertex>>(), t.n);
    node.boundary = make_subset(jn.at("boundary").get<std::vector<Vertex>>(), t.n);
    node.level = jn.at("level").get<int>();
    const auto& children = jn.at("children");
    if (!children.empty()) {
      if (children.size() != 2) throw std::invalid_argument("tree nodes have 0 or 2 children");
      node.child_a = children[0].get<int>();
      node.child_b = children[1].get<int>();
    }
    if (jn.contains("ratio")) node.ratio = jn["ratio"].get<double>();
    if (jn.contains("oversized")) node.oversized = jn["oversized"].get<bool>();
  }
  return t;
}

void save_tree(const DecompositionTree& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << tree_to_json(t) << "\n";
}

DecompositionTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return tree_from_json(ss.str());
}

}  // namespace direach
