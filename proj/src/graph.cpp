#include "resist/graph.hpp"

#include <algorithm>
#include <set>

#include "resist/errors.hpp"

namespace resist {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges, std::string label) {
  if (n < 1) throw PreconditionError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop rejected");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw PreconditionError("duplicate edge rejected");
  }
  std::sort(edges.begin(), edges.end());
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.label = std::move(label);
  return g;
}

bool has_edge(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  return std::binary_search(g.edges.begin(), g.edges.end(), std::pair<int, int>{u, v});
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  auto adj = adjacency_lists(g);
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == g.n;
}

void require_connected(const Graph& g, const char* where) {
  if (!is_connected(g))
    throw PreconditionError(std::string(where) + " requires a connected graph" +
                            (g.label.empty() ? "" : " (got " + g.label + ")"));
}

std::optional<int> regular_degree(const Graph& g) {
  auto d = degrees(g);
  for (int x : d)
    if (x != d[0]) return std::nullopt;
  return d[0];
}

bool is_complete(const Graph& g) {
  return g.edge_count() == g.n * (g.n - 1) / 2;
}

RationalMatrix laplacian(const Graph& g) {
  RationalMatrix l(g.n, g.n);
  for (auto [u, v] : g.edges) {
    l(u, v) = -1;
    l(v, u) = -1;
    l(u, u) += 1;
    l(v, v) += 1;
  }
  return l;
}

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix a(g.n, g.n);
  for (auto [u, v] : g.edges) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

}  // namespace resist
