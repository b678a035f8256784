#pragma once

#include "resist/graph.hpp"

namespace resist {

// All three constructions double the vertex set and require connected input.
// Numbering is fixed so block structure shows up literally in the computed
// matrices: vertex (v, a) of a product is v + a*n, and the double graph puts
// the copy of vertex i at i + n.

// Two copies of g, with copy vertex i' additionally joined to the original
// neighbors of i (and never to i itself).
Graph double_graph(const Graph& g);

// g[K2]: (v,a) ~ (w,b) iff vw is an edge of g, or v = w and a != b.
Graph lexicographic_k2(const Graph& g);

// g x K2: (v,a) ~ (w,b) iff (v = w and a != b) or (vw is an edge and a = b).
Graph cartesian_k2(const Graph& g);

}  // namespace resist
