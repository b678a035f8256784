#include "resist/products.hpp"

#include "resist/errors.hpp"

namespace resist {

Graph double_graph(const Graph& g) {
  require_connected(g, "double_graph");
  int n = g.n;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    edges.push_back({u, v});          // original copy
    edges.push_back({u + n, v + n});  // second copy
    edges.push_back({u, v + n});      // cross edges both ways
    edges.push_back({v, u + n});
  }
  return make_graph(2 * n, std::move(edges), g.label.empty() ? "" : "D2(" + g.label + ")");
}

Graph lexicographic_k2(const Graph& g) {
  require_connected(g, "lexicographic_k2");
  int n = g.n;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    edges.push_back({u, v});
    edges.push_back({u + n, v + n});
    edges.push_back({u, v + n});
    edges.push_back({v, u + n});
  }
  for (int v = 0; v < n; ++v) edges.push_back({v, v + n});  // within each fiber
  return make_graph(2 * n, std::move(edges), g.label.empty() ? "" : g.label + "[K2]");
}

Graph cartesian_k2(const Graph& g) {
  require_connected(g, "cartesian_k2");
  int n = g.n;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    edges.push_back({u, v});
    edges.push_back({u + n, v + n});
  }
  for (int v = 0; v < n; ++v) edges.push_back({v, v + n});
  return make_graph(2 * n, std::move(edges), g.label.empty() ? "" : g.label + " x K2");
}

}  // namespace resist
