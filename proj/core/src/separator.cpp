#include "direach/separator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace direach {

namespace {

constexpr double kRatioSlack = 1e-9;

std::vector<std::vector<Vertex>> components_excluding(const Skeleton& g,
                                                      const std::vector<bool>& removed) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(removed.begin(), removed.end());
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    queue.assign(1, s);
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (std::int64_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
        const Vertex v = g.neighbors[e];
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  return comps;
}

struct Grouping {
  bool feasible = false;    // every grouping keeps both sides <= limit
  Vertex max_side = 0;
  std::vector<int> side;    // per component: 0 or 1
};

/// Splits whole components into two sides. Exact subset-sum when the vertex
/// count is small, greedy largest-first otherwise.
Grouping group_components(const std::vector<std::vector<Vertex>>& comps, Vertex total,
                          double limit) {
  Grouping out;
  out.side.assign(comps.size(), 1);
  if (comps.empty()) {
    out.feasible = true;
    return out;
  }
  const int k = static_cast<int>(comps.size());
  if (total <= 64 && k <= 64) {
    // reachable[i] = sums achievable with the first i components
    std::vector<std::uint64_t> reachable(static_cast<std::size_t>(k) + 1, 0);
    reachable[0] = 1;  // bit s <=> sum s
    for (int i = 0; i < k; ++i) {
      reachable[i + 1] = reachable[i] | (reachable[i] << comps[i].size());
    }
    Vertex best_sum = -1;
    Vertex best_max = total + 1;
    for (Vertex s = 0; s <= total; ++s) {
      if (!((reachable[k] >> s) & 1u)) continue;
      const Vertex mx = std::max(s, static_cast<Vertex>(total - s));
      if (mx < best_max || (mx == best_max && s < best_sum)) {
        best_max = mx;
        best_sum = s;
      }
    }
    Vertex s = best_sum;
    for (int i = k - 1; i >= 0; --i) {
      const auto sz = static_cast<Vertex>(comps[i].size());
      if (s >= sz && ((reachable[i] >> (s - sz)) & 1u)) {
        out.side[i] = 0;
        s -= sz;
      }
    }
    out.max_side = best_max;
  } else {
    std::vector<int> order(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return comps[x].size() > comps[y].size();
    });
    Vertex s0 = 0, s1 = 0;
    for (int i : order) {
      if (s0 <= s1) {
        out.side[i] = 0;
        s0 += static_cast<Vertex>(comps[i].size());
      } else {
        out.side[i] = 1;
        s1 += static_cast<Vertex>(comps[i].size());
      }
    }
    out.max_side = std::max(s0, s1);
  }
  out.feasible = out.max_side <= limit + kRatioSlack;
  return out;
}

SeparatorResult assemble(const Skeleton& g, std::vector<Vertex> sep,
                         const std::vector<std::vector<Vertex>>& comps,
                         const std::vector<int>& side) {
  std::vector<Vertex> a, b;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& dst = side[i] == 0 ? a : b;
    dst.insert(dst.end(), comps[i].begin(), comps[i].end());
  }
  // canonical orientation: part_a holds the smallest non-separator vertex
  if (a.empty() || (!b.empty() && *std::min_element(b.begin(), b.end()) <
                                      *std::min_element(a.begin(), a.end()))) {
    std::swap(a, b);
  }
  SeparatorResult res;
  res.part_a = make_subset(std::move(a), g.n);
  res.part_b = make_subset(std::move(b), g.n);
  res.sep = make_subset(std::move(sep), g.n);
  res.ratio = g.n > 0
                  ? static_cast<double>(std::max(res.part_a.size(), res.part_b.size())) / g.n
                  : 0.0;
  return res;
}

SeparatorResult exhaustive_separator(const Skeleton& g, const SeparatorOptions& opts) {
  const Vertex n = g.n;
  if (n > 64) throw std::invalid_argument("exhaustive separator search limited to n <= 64");
  const double limit = opts.ratio * n;
  const int max_size = n <= 20 ? static_cast<int>(n) : opts.exhaustive_size_cap;

  std::vector<Vertex> pick;
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  bool found = false;
  Vertex best_max = n + 1;
  SeparatorResult best;

  // lexicographic enumeration of all size-s subsets
  std::function<void(Vertex, int)> recurse = [&](Vertex start, int remaining) {
    if (remaining == 0) {
      const auto comps = components_excluding(g, removed);
      for (const auto& comp : comps) {
        if (static_cast<double>(comp.size()) > limit + kRatioSlack) return;
      }
      const Vertex rest = n - static_cast<Vertex>(pick.size());
      const Grouping grouping = group_components(comps, rest, limit);
      if (!grouping.feasible) return;
      if (grouping.max_side < best_max) {
        best_max = grouping.max_side;
        best = assemble(g, pick, comps, grouping.side);
        found = true;
      }
      return;
    }
    for (Vertex v = start; v + remaining <= n; ++v) {
      pick.push_back(v);
      removed[static_cast<std::size_t>(v)] = true;
      recurse(v + 1, remaining - 1);
      removed[static_cast<std::size_t>(v)] = false;
      pick.pop_back();
    }
  };

  for (int s = 0; s <= std::min<int>(max_size, n); ++s) {
    recurse(0, s);
    if (found) return best;
  }
  throw std::runtime_error("no balanced separator within ratio " + std::to_string(opts.ratio) +
                           " found by exhaustive search (size cap " +
                           std::to_string(max_size) + ")");
}

SeparatorResult grid_separator(const Skeleton& g, const SeparatorOptions& opts,
                               const std::vector<Vertex>& global_ids) {
  const int rows = opts.grid_rows, cols = opts.grid_cols;
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("grid strategy needs declared dimensions");
  if (static_cast<std::size_t>(g.n) != global_ids.size()) {
    throw std::invalid_argument("grid strategy needs one coordinate per vertex");
  }
  std::vector<int> row_of(static_cast<std::size_t>(g.n)), col_of(static_cast<std::size_t>(g.n));
  for (Vertex i = 0; i < g.n; ++i) {
    const Vertex gid = global_ids[static_cast<std::size_t>(i)];
    if (gid < 0 || gid >= static_cast<Vertex>(rows) * cols) {
      throw std::invalid_argument("vertex id outside the declared grid");
    }
    row_of[static_cast<std::size_t>(i)] = static_cast<int>(gid / cols);
    col_of[static_cast<std::size_t>(i)] = static_cast<int>(gid % cols);
  }
  for (const auto& [a, b] : g.edges) {
    const int dr = std::abs(row_of[static_cast<std::size_t>(a)] - row_of[static_cast<std::size_t>(b)]);
    const int dc = std::abs(col_of[static_cast<std::size_t>(a)] - col_of[static_cast<std::size_t>(b)]);
    if (dr + dc != 1) throw std::invalid_argument("input is not the declared grid");
  }

  const bool full_block = g.n == static_cast<Vertex>(rows) * cols;
  // cut perpendicular to the longer axis; ties cut between columns
  const bool cut_cols = cols >= rows;
  const auto& main_coord = cut_cols ? col_of : row_of;
  const auto& cross_coord = cut_cols ? row_of : col_of;
  const int main_extent = cut_cols ? cols : rows;
  const int cross_extent = cut_cols ? rows : cols;

  std::vector<Vertex> sep;
  std::vector<bool> removed(static_cast<std::size_t>(g.n), false);
  if (full_block && main_extent % 2 == 0 && main_extent >= 2 && cross_extent >= 1) {
    // staircase cut: upper half uses line extent/2-1, lower half extent/2;
    // on a full even block this splits the remainder exactly in half
    const int hi_line = main_extent / 2;
    const int lo_line = hi_line - 1;
    for (Vertex i = 0; i < g.n; ++i) {
      const int line = cross_coord[static_cast<std::size_t>(i)] < cross_extent / 2 ? lo_line : hi_line;
      if (main_coord[static_cast<std::size_t>(i)] == line) {
        sep.push_back(i);
        removed[static_cast<std::size_t>(i)] = true;
      }
    }
    // left side: strictly before the staircase line of the own row
    std::vector<Vertex> a, b;
    for (Vertex i = 0; i < g.n; ++i) {
      if (removed[static_cast<std::size_t>(i)]) continue;
      const int line = cross_coord[static_cast<std::size_t>(i)] < cross_extent / 2 ? lo_line : hi_line;
      (main_coord[static_cast<std::size_t>(i)] < line ? a : b).push_back(i);
    }
    SeparatorResult res;
    res.sep = make_subset(std::move(sep), g.n);
    res.part_a = make_subset(std::move(a), g.n);
    res.part_b = make_subset(std::move(b), g.n);
    if (!res.part_a.empty() && !res.part_b.empty() &&
        res.part_b.members[0] < res.part_a.members[0]) {
      std::swap(res.part_a, res.part_b);
    }
    res.ratio = static_cast<double>(std::max(res.part_a.size(), res.part_b.size())) / g.n;
    return res;
  }

  // general subset: straight cut on the present coordinate minimizing the
  // larger side
  int lo = main_extent, hi = -1;
  for (Vertex i = 0; i < g.n; ++i) {
    lo = std::min(lo, main_coord[static_cast<std::size_t>(i)]);
    hi = std::max(hi, main_coord[static_cast<std::size_t>(i)]);
  }
  int best_line = lo;
  Vertex best_max = g.n + 1;
  for (int line = lo; line <= hi; ++line) {
    Vertex left = 0, right = 0;
    for (Vertex i = 0; i < g.n; ++i) {
      if (main_coord[static_cast<std::size_t>(i)] < line) ++left;
      if (main_coord[static_cast<std::size_t>(i)] > line) ++right;
    }
    const Vertex mx = std::max(left, right);
    if (mx < best_max) {
      best_max = mx;
      best_line = line;
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex i = 0; i < g.n; ++i) {
    const int coordinate = main_coord[static_cast<std::size_t>(i)];
    if (coordinate == best_line) {
      sep.push_back(i);
    } else {
      (coordinate < best_line ? a : b).push_back(i);
    }
  }
  SeparatorResult res;
  res.sep = make_subset(std::move(sep), g.n);
  res.part_a = make_subset(std::move(a), g.n);
  res.part_b = make_subset(std::move(b), g.n);
  if ((res.part_a.empty() && !res.part_b.empty()) ||
      (!res.part_a.empty() && !res.part_b.empty() &&
       res.part_b.members[0] < res.part_a.members[0])) {
    std::swap(res.part_a, res.part_b);
  }
  res.ratio = g.n > 0
                  ? static_cast<double>(std::max(res.part_a.size(), res.part_b.size())) / g.n
                  : 0.0;
  return res;
}

SeparatorResult bfs_heuristic_separator(const Skeleton& g, const SeparatorOptions& opts) {
  const Vertex n = g.n;
  const double limit = opts.ratio * n;
  std::vector<bool> none(static_cast<std::size_t>(n), false);
  const auto comps = components_excluding(g, none);

  // disconnected input may already pack into two balanced sides
  {
    const Grouping grouping = group_components(comps, n, limit);
    if (grouping.feasible) {
      bool all_small = true;
      for (const auto& comp : comps) {
        if (static_cast<double>(comp.size()) > limit + kRatioSlack) all_small = false;
      }
      if (all_small) return assemble(g, {}, comps, grouping.side);
    }
  }

  // cut the largest component along a BFS level
  std::size_t big = 0;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].size() > comps[big].size()) big = i;
  }
  Vertex root = comps[big][0];
  for (Vertex v : comps[big]) {
    if (g.degree(v) > g.degree(root)) root = v;
  }
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{root};
  level[static_cast<std::size_t>(root)] = 0;
  int max_level = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (std::int64_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      const Vertex v = g.neighbors[e];
      if (level[static_cast<std::size_t>(v)] < 0) {
        level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
        max_level = std::max(max_level, level[static_cast<std::size_t>(v)]);
        queue.push_back(v);
      }
    }
  }

  struct Candidate {
    Vertex sep_size = -1;
    Vertex max_side = 0;
    int cut = -1;
    bool feasible = false;
  };
  Candidate best_feasible, best_any;
  for (int cut = 0; cut <= max_level; ++cut) {
    Vertex sep_size = 0;
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) {
      if (level[static_cast<std::size_t>(v)] == cut) {
        removed[static_cast<std::size_t>(v)] = true;
        ++sep_size;
      }
    }
    const auto rest = components_excluding(g, removed);
    bool all_small = true;
    for (const auto& comp : rest) {
      if (static_cast<double>(comp.size()) > limit + kRatioSlack) all_small = false;
    }
    const Grouping grouping = group_components(rest, n - sep_size, limit);
    Candidate cand{sep_size, grouping.max_side, cut, all_small && grouping.feasible};
    const auto better = [](const Candidate& x, const Candidate& y) {
      if (y.cut < 0) return true;
      if (x.sep_size != y.sep_size) return x.sep_size < y.sep_size;
      if (x.max_side != y.max_side) return x.max_side < y.max_side;
      return false;
    };
    if (cand.feasible && better(cand, best_feasible)) best_feasible = cand;
    if (better(cand, best_any)) best_any = cand;
  }

  const Candidate& chosen = best_feasible.cut >= 0 ? best_feasible : best_any;
  std::vector<Vertex> sep;
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    if (level[static_cast<std::size_t>(v)] == chosen.cut) {
      removed[static_cast<std::size_t>(v)] = true;
      sep.push_back(v);
    }
  }
  const auto rest = components_excluding(g, removed);
  const Grouping grouping = group_components(rest, n - static_cast<Vertex>(sep.size()),
                                             limit);
  return assemble(g, std::move(sep), rest, grouping.side);
}

}  // namespace

SeparatorResult find_separator(const Skeleton& g, const SeparatorOptions& opts,
                               const std::vector<Vertex>& global_ids) {
  if (g.n < 2) throw std::invalid_argument("separator search needs at least two vertices");
  switch (opts.strategy) {
    case SeparatorStrategy::kExhaustive:
      return exhaustive_separator(g, opts);
    case SeparatorStrategy::kGrid:
      return grid_separator(g, opts, global_ids);
    case SeparatorStrategy::kBfsHeuristic:
      return bfs_heuristic_separator(g, opts);
  }
  throw std::logic_error("unknown separator strategy");
}

SeparatorResult find_separator(const Skeleton& g, const SeparatorOptions& opts) {
  std::vector<Vertex> identity(static_cast<std::size_t>(g.n));
  for (Vertex v = 0; v < g.n; ++v) identity[static_cast<std::size_t>(v)] = v;
  return find_separator(g, opts, identity);
}

SeparatorFinder make_finder(const SeparatorOptions& opts) {
  return [opts](const Skeleton& g, const std::vector<Vertex>& global_ids) {
    return find_separator(g, opts, global_ids);
  };
}

HalfSeparator balance_to_half(const Skeleton& g, const SeparatorFinder& finder) {
  std::vector<Vertex> a, b, c, d(static_cast<std::size_t>(g.n));
  for (Vertex v = 0; v < g.n; ++v) d[static_cast<std::size_t>(v)] = v;

  HalfSeparator out;
  out.steps.push_back(BalanceStep{a, b, c, d});

  while (!d.empty()) {
    if (d.size() == 1) {
      // a lone vertex cannot be split; it joins the separator
      c.push_back(d[0]);
      d.clear();
      std::sort(c.begin(), c.end());
      out.steps.push_back(BalanceStep{a, b, c, d});
      break;
    }
    const InducedSkeleton sub = induced_skeleton(g, d);
    const SeparatorResult sr = finder(sub.graph, sub.to_global);

    auto to_global = [&](const VertexSubset& s) {
      std::vector<Vertex> gl;
      gl.reserve(s.members.size());
      for (Vertex v : s.members) gl.push_back(sub.to_global[static_cast<std::size_t>(v)]);
      return gl;
    };
    std::vector<Vertex> small = to_global(sr.part_a);
    std::vector<Vertex> large = to_global(sr.part_b);
    if (small.size() > large.size()) std::swap(small, large);
    std::vector<Vertex> cut = to_global(sr.sep);

    std::vector<Vertex> merged = a;
    merged.insert(merged.end(), small.begin(), small.end());
    // ties keep the merged set as A
    if (merged.size() <= b.size()) {
      a = std::move(merged);
    } else {
      a = std::move(b);
      b = std::move(merged);
    }
    c.insert(c.end(), cut.begin(), cut.end());
    d = std::move(large);

    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    std::sort(d.begin(), d.end());
    out.steps.push_back(BalanceStep{a, b, c, d});
  }

  out.part_a = make_subset(a, g.n);
  out.part_b = make_subset(b, g.n);
  out.sep = make_subset(c, g.n);
  return out;
}

SeparatorResult make_doubly_incident(const Skeleton& g, const SeparatorResult& in) {
  // 0 = part_a, 1 = part_b, 2 = separator
  std::vector<int> where(static_cast<std::size_t>(g.n), -1);
  for (Vertex v : in.part_a.members) where[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : in.part_b.members) where[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : in.sep.members) where[static_cast<std::size_t>(v)] = 2;
  for (Vertex v = 0; v < g.n; ++v) {
    if (where[static_cast<std::size_t>(v)] < 0) {
      throw std::invalid_argument("separator triple does not cover the vertex set");
    }
  }

  Vertex size_a = in.part_a.size(), size_b = in.part_b.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.n; ++v) {
      if (where[static_cast<std::size_t>(v)] != 2) continue;
      bool touches_a = false, touches_b = false;
      for (std::int64_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
        const int side = where[static_cast<std::size_t>(g.neighbors[e])];
        touches_a |= side == 0;
        touches_b |= side == 1;
      }
      if (touches_a && touches_b) continue;
      int target;
      if (touches_a) {
        target = 0;
      } else if (touches_b) {
        target = 1;
      } else {
        target = size_a <= size_b ? 0 : 1;  // isolated: smaller part, ties to A
      }
      where[static_cast<std::size_t>(v)] = target;
      (target == 0 ? size_a : size_b) += 1;
      changed = true;
    }
  }

  std::vector<Vertex> a, b, sep;
  for (Vertex v = 0; v < g.n; ++v) {
    switch (where[static_cast<std::size_t>(v)]) {
      case 0: a.push_back(v); break;
      case 1: b.push_back(v); break;
      default: sep.push_back(v); break;
    }
  }
  SeparatorResult res;
  res.part_a = make_subset(std::move(a), g.n);
  res.part_b = make_subset(std::move(b), g.n);
  res.sep = make_subset(std::move(sep), g.n);
  res.ratio = g.n > 0
                  ? static_cast<double>(std::max(res.part_a.size(), res.part_b.size())) / g.n
                  : 0.0;
  return res;
}

}  // namespace direach
