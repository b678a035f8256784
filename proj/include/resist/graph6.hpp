#pragma once

#include <string>
#include <string_view>

#include "resist/graph.hpp"

namespace resist {

// Standard graph6 codec: N(n) length header, then the upper adjacency
// triangle in column-major order, 6 bits per character, zero padding,
// characters offset by 63. The optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

}  // namespace resist
