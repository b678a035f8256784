#include "fixtures.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

namespace fixtures {

using resist::Graph;
using resist::Rational;
using resist::RationalMatrix;

namespace {

Graph from_one_based(int n, std::vector<std::pair<int, int>> edges, std::string label) {
  for (auto& [u, v] : edges) {
    --u;
    --v;
  }
  return resist::make_graph(n, std::move(edges), std::move(label));
}

}  // namespace

Graph fig1() {
  return from_one_based(9,
                        {{6, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 8}, {8, 1}, {1, 9},
                         {9, 5}, {2, 7}, {7, 6}, {7, 3}, {3, 8}, {8, 4}, {4, 9}, {7, 5}, {2, 9}},
                        "fig1");
}

Graph fig2() {
  return from_one_based(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}, {2, 6}, {3, 5}},
                        "fig2");
}

Graph fig3() {
  return from_one_based(9,
                        {{6, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {5, 6}, {6, 7}, {7, 8},
                         {8, 9}, {9, 3}, {3, 8}, {8, 2}, {2, 5}, {6, 4}, {4, 9}, {9, 7}, {7, 5}},
                        "fig3");
}

RationalMatrix fig2_resistance() {
  const Rational a(8, 15), b(11, 15), c(3, 5), z(0);
  return RationalMatrix::from_rows({{z, a, b, c, b, a},
                                    {a, z, c, b, b, a},
                                    {b, c, z, a, a, b},
                                    {c, b, a, z, a, b},
                                    {b, b, a, a, z, c},
                                    {a, a, b, b, c, z}});
}

RationalMatrix fig3_resistance() {
  const Rational p(41, 90), q(3, 5), r(19, 45), s(17, 30), t(28, 45), u(5, 9), z(0);
  return RationalMatrix::from_rows({{z, p, q, p, r, r, s, t, t},
                                    {p, z, p, u, p, s, u, p, s},
                                    {q, p, z, p, t, t, s, r, r},
                                    {p, u, p, z, s, p, u, s, p},
                                    {r, p, t, s, z, r, p, q, t},
                                    {r, s, t, p, r, z, p, t, q},
                                    {s, u, s, u, p, p, z, p, p},
                                    {t, p, r, s, q, t, p, z, r},
                                    {t, s, r, p, t, q, p, r, z}});
}

namespace {

// Pair (i < j) -> column-major upper-triangle bit index; independent of n.
int edge_index(int i, int j) {
  return j * (j - 1) / 2 + i;
}

// For every permutation of [0, n): where each edge bit moves.
std::vector<std::vector<int>> permutation_tables(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> tables;
  do {
    std::vector<int> t(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        int pi = perm[i], pj = perm[j];
        t[edge_index(i, j)] = edge_index(std::min(pi, pj), std::max(pi, pj));
      }
    tables.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

uint32_t relabel(uint32_t mask, const std::vector<int>& table) {
  uint32_t out = 0;
  while (mask) {
    int e = std::countr_zero(mask);
    mask &= mask - 1;
    out |= uint32_t{1} << table[e];
  }
  return out;
}

uint32_t canonical(uint32_t mask, const std::vector<std::vector<int>>& tables) {
  uint32_t best = ~uint32_t{0};
  for (const auto& t : tables) best = std::min(best, relabel(mask, t));
  return best;
}

// All isomorphism classes on n vertices as canonical masks, by adding one
// vertex (with every possible neighborhood) to every class on n-1.
const std::vector<uint32_t>& graph_masks(int n) {
  static std::map<int, std::vector<uint32_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<uint32_t> masks;
  if (n == 1) {
    masks = {0};
  } else {
    const std::vector<uint32_t>& prev = graph_masks(n - 1);
    auto tables = permutation_tables(n);
    const int base = (n - 1) * (n - 2) / 2;
    std::unordered_set<uint32_t> seen;
    for (uint32_t pm : prev)
      for (uint32_t nb = 0; nb < (uint32_t{1} << (n - 1)); ++nb) {
        uint32_t canon = canonical(pm | (nb << base), tables);
        if (seen.insert(canon).second) masks.push_back(canon);
      }
    std::sort(masks.begin(), masks.end());
  }
  return cache.emplace(n, std::move(masks)).first->second;
}

Graph graph_from_mask(int n, uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask & (uint32_t{1} << edge_index(i, j))) edges.push_back({i, j});
  return resist::make_graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  for (uint32_t mask : graph_masks(n)) out.push_back(graph_from_mask(n, mask));
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (resist::is_connected(g)) out.push_back(std::move(g));
  return out;
}

Graph random_connected(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (coin(rng)) edges.push_back({i, j});
    Graph g = resist::make_graph(n, std::move(edges));
    if (resist::is_connected(g)) return g;
  }
}

Graph random_tree(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  return resist::make_graph(n, std::move(edges));
}

}  // namespace fixtures
