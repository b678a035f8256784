#include "resist/oracle.hpp"

#include <cstdint>
#include <numeric>

#include "resist/errors.hpp"

namespace resist {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false if x and y were already joined (the edge would close a cycle).
  bool join(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

// Visit every m-bit mask with exactly k bits set (Gosper's hack).
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(uint32_t{0});
    return;
  }
  uint32_t mask = (uint32_t{1} << k) - 1;
  const uint32_t limit = uint32_t{1} << m;
  while (mask < limit) {
    fn(mask);
    uint32_t low = mask & -mask;
    uint32_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
}

}  // namespace

ForestCounts count_structures(const Graph& g) {
  require_connected(g, "count_structures");
  const int n = g.n;
  const int m = g.edge_count();
  if (m > 24)
    throw PreconditionError("count_structures: enumeration budget is 24 edges, got " + std::to_string(m));

  ForestCounts counts;
  counts.sep.assign(n, std::vector<BigInt>(n, BigInt(0)));

  if (n == 1) {  // the empty forest is the one spanning tree
    counts.trees = 1;
    return counts;
  }

  long long trees = 0;
  for_each_subset(m, n - 1, [&](uint32_t mask) {
    UnionFind uf(n);
    for (int e = 0; e < m; ++e)
      if (mask & (uint32_t{1} << e))
        if (!uf.join(g.edges[e].first, g.edges[e].second)) return;
    ++trees;  // n-1 acyclic edges span
  });
  counts.trees = trees;

  // Acyclic (n-2)-subsets are exactly the spanning 2-forests; credit every
  // vertex pair the forest separates.
  std::vector<std::vector<long long>> sep(n, std::vector<long long>(n, 0));
  for_each_subset(m, n - 2, [&](uint32_t mask) {
    UnionFind uf(n);
    for (int e = 0; e < m; ++e)
      if (mask & (uint32_t{1} << e))
        if (!uf.join(g.edges[e].first, g.edges[e].second)) return;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uf.find(i) != uf.find(j)) {
          ++sep[i][j];
          ++sep[j][i];
        }
  });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) counts.sep[i][j] = sep[i][j];
  return counts;
}

RationalMatrix oracle_resistance(const Graph& g) {
  ForestCounts counts = count_structures(g);
  RationalMatrix r(g.n, g.n);
  Rational trees(counts.trees);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j) r(i, j) = Rational(counts.sep[i][j]) / trees;
  return r;
}

}  // namespace resist
