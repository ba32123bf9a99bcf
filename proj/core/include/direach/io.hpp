#pragma once

#include <string>

#include "direach/graph.hpp"
#include "direach/hopset.hpp"
#include "direach/shortcut.hpp"

namespace direach {

/// Edge-list format: first non-comment line "n m", then m lines "u v [w]".
/// '#' starts a comment; blank lines are skipped. Ids are 0-based unless
/// one_indexed is set. Errors carry the offending line number.
WeightedDiGraph parse_edge_list(const std::string& path, bool one_indexed = false);
WeightedDiGraph parse_edge_list_text(const std::string& text, bool one_indexed = false,
                                     const std::string& name = "<input>");

/// Text export, one "u v" or "u v w" line per edge.
std::string shortcut_to_text(const ShortcutSet& h);
std::string hopset_to_text(const HopsetSet& h);

}  // namespace direach
