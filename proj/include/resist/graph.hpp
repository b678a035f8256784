#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resist/matrix.hpp"

namespace resist {

// Simple undirected graph: vertex count plus a sorted, duplicate-free edge
// set with 0-based endpoints i < j. Treat as immutable after make_graph.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::string label;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Validates (n >= 1, endpoints in range, no self-loops, no duplicates) and
// normalizes endpoint order and edge order.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges, std::string label = "");

bool has_edge(const Graph& g, int u, int v);
std::vector<int> degrees(const Graph& g);
std::vector<std::vector<int>> adjacency_lists(const Graph& g);

bool is_connected(const Graph& g);
// Throws PreconditionError naming `where` if g is disconnected.
void require_connected(const Graph& g, const char* where);

// Common degree if g is regular.
std::optional<int> regular_degree(const Graph& g);
bool is_complete(const Graph& g);

// L = D - A as an exact integer-valued matrix.
RationalMatrix laplacian(const Graph& g);
RationalMatrix adjacency_matrix(const Graph& g);

}  // namespace resist
