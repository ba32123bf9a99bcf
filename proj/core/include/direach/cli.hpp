#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "direach/graph.hpp"

namespace direach {

/// One resolved invocation of the tool; `run_command` does the work and
/// renders the result document.
struct RunConfig {
  std::string command;  // reach | dist | shortcut | hopset | decompose | bench
  std::string input_path;
  bool one_indexed = false;

  std::vector<Vertex> sources;  // explicit source list
  int random_sources = 0;       // or: sample this many with `seed`

  double epsilon = 0.0;  // dist / hopset stretch budget
  int hops = 0;          // shortcut hop target D; 0 picks the planned value
  std::string tree_path; // import a decomposition instead of building one

  std::uint64_t seed = 1;
  int threads = 1;

  // decomposition construction
  std::string strategy = "bfs";  // bfs | exhaustive | grid
  int grid_rows = 0;
  int grid_cols = 0;
  int tau = 8;
  double ratio = 2.0 / 3.0;
  bool rebalance = false;  // wrap the finder in the half-balance loop
};

struct CommandResult {
  int exit_code = 0;
  std::string output;      // JSON document (CSV for bench)
  std::string edges_text;  // "u v [w]" lines for shortcut/hopset
};

CommandResult run_command(const RunConfig& cfg);

}  // namespace direach
