#include "direach/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace direach {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

WeightedDiGraph parse_edge_list_text(const std::string& text, bool one_indexed,
                                     const std::string& name) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header_seen = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream fields(strip_comment(raw));
    if (!header_seen) {
      if (!(fields >> n >> m)) {
        std::string probe;
        if (std::istringstream(strip_comment(raw)) >> probe) {
          parse_fail(name, lineno, "expected header \"n m\"");
        }
        continue;  // blank or comment-only line before the header
      }
      std::string extra;
      if (fields >> extra) parse_fail(name, lineno, "trailing tokens after header");
      if (n < 0 || m < 0) parse_fail(name, lineno, "negative counts in header");
      header_seen = true;
      continue;
    }
    long long u, v;
    if (!(fields >> u)) continue;  // blank or comment-only line
    if (!(fields >> v)) parse_fail(name, lineno, "edge line needs at least \"u v\"");
    double w = 1.0;
    if (fields >> w) {
      std::string extra;
      if (fields >> extra) parse_fail(name, lineno, "trailing tokens after edge");
    }
    if (one_indexed) {
      if (u < 1 || v < 1) parse_fail(name, lineno, "one-indexed ids start at 1");
      --u;
      --v;
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      parse_fail(name, lineno,
                 "vertex " + std::to_string(std::max(u, v) + (one_indexed ? 1 : 0)) +
                     " out of range for n=" + std::to_string(n));
    }
    if (!(w >= 0.0) || !std::isfinite(w)) parse_fail(name, lineno, "weight must be >= 0");
    if (static_cast<long long>(edges.size()) == m) {
      parse_fail(name, lineno, "more edges than the header announced");
    }
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (!header_seen) throw std::runtime_error(name + ": missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m) {
    throw std::runtime_error(name + ": header announced " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  }
  return build_graph(static_cast<Vertex>(n), edges);
}

WeightedDiGraph parse_edge_list(const std::string& path, bool one_indexed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list_text(ss.str(), one_indexed, path);
}

std::string shortcut_to_text(const ShortcutSet& h) {
  std::ostringstream out;
  for (const auto& [u, v] : h.edges) out << u << " " << v << "\n";
  return out.str();
}

std::string hopset_to_text(const HopsetSet& h) {
  std::ostringstream out;
  for (const HopsetEdge& e : h.edges) {
    out << e.from << " " << e.to << " ";
    if (e.weight == std::floor(e.weight) && std::abs(e.weight) < 1e15) {
      out << static_cast<long long>(e.weight);
    } else {
      out << e.weight;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace direach
