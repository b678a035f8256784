#pragma once

#include <optional>
#include <vector>

#include "resist/graph.hpp"
#include "resist/matrix.hpp"

namespace resist {

struct ClassLabel {
  enum class Kind { resistance_regular, pseudo_resistance_regular, neither };
  Kind kind = Kind::neither;
  // resistance_regular: the common row sum of R.
  // pseudo_resistance_regular: the common ratio T_i / R_i.
  std::optional<Rational> k;
  // Set for resistance regular graphs: they are also pseudo with the same
  // constant.
  std::optional<Rational> pseudo_also;
};

const char* to_string(ClassLabel::Kind kind);

struct ResistanceProfile {
  RationalMatrix R;              // n x n resistance distance matrix
  std::vector<Rational> rdeg;    // R_i, row sums of R
  std::vector<Rational> second;  // T_i = sum_j r_ij R_j
  std::vector<Rational> avg;     // T_i / R_i
  Rational kf;                   // Kirchhoff index, sum over pairs
  Rational s_sum;                // S(G) = sum_i sum_j r_ij^2
  ClassLabel label;

  int n() const { return R.rows(); }
};

// Exact resistance distance matrix, r_ij = l+_ii + l+_jj - 2 l+_ij.
RationalMatrix resistance_matrix(const Graph& g);

// Closed forms from the literature; each must agree entrywise with
// resistance_matrix of the explicitly constructed graph.
Rational cycle_resistance(int n, int i, int j);
RationalMatrix double_graph_resistance(const Graph& g);
RationalMatrix lexicographic_k2_resistance(const Graph& g);
RationalMatrix complete_bipartite_nn_resistance(int n);

// Full exact profile with classification. Rejects n = 1 (no R-degrees).
ResistanceProfile profile(const Graph& g);

struct DiagPinvResult {
  bool equal = false;
  // Witness populated when equal is false.
  int min_index = -1;
  int max_index = -1;
  Rational min_value;
  Rational max_value;
};

// Resistance regularity test via the diagonal of the Laplacian
// pseudoinverse: true iff all l+_ii coincide (exact comparison).
DiagPinvResult diag_pinv_test(const Graph& g);

}  // namespace resist
