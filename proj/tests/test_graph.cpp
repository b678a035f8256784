#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "resist/errors.hpp"
#include "resist/families.hpp"
#include "resist/graph.hpp"
#include "support/fixtures.hpp"

using namespace resist;

TEST_CASE("make_graph validation") {
  CHECK_THROWS_AS(make_graph(0, {}), PreconditionError);
  CHECK_THROWS_AS(make_graph(2, {{0, 0}}), PreconditionError);   // loop
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}), PreconditionError);   // out of range
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), PreconditionError);  // duplicate

  Graph g = make_graph(3, {{2, 1}, {0, 1}});
  // edges are normalised to (lo, hi) and sorted
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.n == 3);
}

TEST_CASE("incidence queries") {
  Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(has_edge(p3, 0, 1));
  CHECK(has_edge(p3, 1, 0));
  CHECK_FALSE(has_edge(p3, 0, 2));
  CHECK(degrees(p3) == std::vector<int>{1, 2, 1});

  auto adj = adjacency_lists(p3);
  CHECK(adj[0] == std::vector<int>{1});
  CHECK(adj[1] == std::vector<int>{0, 2});
  CHECK(adj[2] == std::vector<int>{1});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(make_graph(1, {})));
  CHECK(is_connected(make_graph(2, {{0, 1}})));
  CHECK_FALSE(is_connected(make_graph(2, {})));
  CHECK_FALSE(is_connected(make_graph(4, {{0, 1}, {2, 3}})));
  CHECK_NOTHROW(require_connected(make_graph(2, {{0, 1}}), "test"));
  CHECK_THROWS_AS(require_connected(make_graph(3, {{0, 1}}), "test"), PreconditionError);
}

TEST_CASE("regularity and completeness") {
  CHECK(regular_degree(generate({Family::cycle, {5}})) == 2);
  CHECK(regular_degree(generate({Family::complete, {4}})) == 3);
  CHECK_FALSE(regular_degree(make_graph(3, {{0, 1}, {1, 2}})).has_value());

  CHECK(is_complete(generate({Family::complete, {2}})));
  CHECK(is_complete(generate({Family::complete, {5}})));
  CHECK_FALSE(is_complete(generate({Family::cycle, {4}})));
  CHECK(is_complete(make_graph(1, {})));
}

TEST_CASE("matrices") {
  Graph k2 = make_graph(2, {{0, 1}});
  CHECK(laplacian(k2) == RationalMatrix::from_rows({{1, -1}, {-1, 1}}));
  CHECK(adjacency_matrix(k2) == RationalMatrix::from_rows({{0, 1}, {1, 0}}));

  Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(laplacian(p3) ==
        RationalMatrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));

  // complete bipartite Laplacian has the block shape [aI, -J; -J, bI]
  Graph k23 = generate({Family::complete_bipartite, {2, 3}});
  RationalMatrix l = laplacian(k23);
  CHECK(l.block(0, 0, 2, 2) == RationalMatrix::identity(2).scaled(3));
  CHECK(l.block(0, 2, 2, 3) == RationalMatrix::ones(2, 3).scaled(-1));
  CHECK(l.block(2, 2, 3, 3) == RationalMatrix::identity(3).scaled(2));
  CHECK(l.has_zero_row_sums());
  CHECK(l.is_symmetric());
}

TEST_CASE("handshake across assorted graphs") {
  std::vector<Graph> samples = {
      generate({Family::complete, {6}}),
      generate({Family::cycle, {7}}),
      generate({Family::complete_bipartite, {3, 4}}),
      generate({Family::cocktail_party, {3}}),
      generate({Family::path, {5}}),
      fixtures::fig1(),
      fixtures::fig2(),
      fixtures::fig3(),
  };
  for (const Graph& g : samples) {
    auto deg = degrees(g);
    long long sum = std::accumulate(deg.begin(), deg.end(), 0LL);
    CHECK(sum == 2LL * static_cast<long long>(g.edges.size()));
    RationalMatrix l = laplacian(g);
    CHECK(l.is_symmetric());
    CHECK(l.has_zero_row_sums());
    for (int i = 0; i < g.n; ++i) CHECK(l(i, i) == deg[i]);
  }
}
