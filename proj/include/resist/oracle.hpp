#pragma once

#include <vector>

#include "resist/graph.hpp"
#include "resist/matrix.hpp"
#include "resist/rational.hpp"

namespace resist {

struct ForestCounts {
  BigInt trees;                        // spanning trees of G
  std::vector<std::vector<BigInt>> sep;  // sep[i][j]: 2-forests separating i and j
};

// Count spanning trees and separating 2-forests by explicit enumeration
// of edge subsets (union-find for acyclicity). Exponential in the edge
// count; refuses graphs with more than 24 edges.
ForestCounts count_structures(const Graph& g);

// Independent resistance matrix: r_ij = sep[i][j] / trees. Shares no code
// with the pseudoinverse pipeline.
RationalMatrix oracle_resistance(const Graph& g);

}  // namespace resist
