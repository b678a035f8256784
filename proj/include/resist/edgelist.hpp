#pragma once

#include <string>
#include <string_view>

#include "resist/graph.hpp"

namespace resist {

// Text format: header line "n <count>", then one "u v" edge per line with
// 1-based vertex ids. '#' starts a comment; blank lines are skipped.
// Duplicate edges and self-loops are rejected.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace resist
