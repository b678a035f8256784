#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "resist/graph.hpp"
#include "resist/matrix.hpp"

namespace fixtures {

// The three reference graphs (9, 6, and 9 vertices). Edges transcribed
// once; every test takes them from here.
resist::Graph fig1();  // 4-regular, resistance regular with k = 4
resist::Graph fig2();  // 3-regular, resistance regular with k = 47/15
resist::Graph fig3();  // 4-regular, NOT resistance regular

// Frozen expected resistance matrices for fig2/fig3 (exact rationals).
resist::RationalMatrix fig2_resistance();
resist::RationalMatrix fig3_resistance();

// Exhaustive unlabeled-graph corpora (one representative per isomorphism
// class), built by extending smaller graphs and canonicalizing over all
// vertex permutations. n <= 7.
std::vector<resist::Graph> all_graphs(int n);
std::vector<resist::Graph> connected_graphs(int n);

// Seeded random generators for property tests.
resist::Graph random_connected(int n, std::mt19937& rng);
resist::Graph random_tree(int n, std::mt19937& rng);

}  // namespace fixtures
