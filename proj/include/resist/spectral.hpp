#pragma once

#include <utility>
#include <vector>

#include "resist/graph.hpp"
#include "resist/jacobi.hpp"
#include "resist/matrix.hpp"

namespace resist {

struct Spectrum {
  std::vector<double> values;  // all n eigenvalues, descending
  // (representative value, multiplicity) after tolerance grouping; the
  // representative is the group mean.
  std::vector<std::pair<double, int>> groups;
  double energy = 0.0;  // sum of |eigenvalue| over all n
  double radius = 0.0;  // largest eigenvalue

  std::vector<double> distinct() const;  // group representatives, descending
};

// Eigenvalues of the resistance matrix R(G), grouped: two eigenvalues
// share a group when |a - b| < tol * max(1, |a|). Requires a connected
// graph with n >= 2; enforces the single-positive-eigenvalue invariant.
Spectrum r_spectrum(const Graph& g, double tol = 1e-9);

// Group an eigenvalue list (sorted descending internally).
Spectrum group_eigenvalues(std::vector<double> values, double tol = 1e-9);

struct LaplacianEigen {
  std::vector<double> values;  // descending; last entry pinned to 0
  FloatMatrix vectors;         // column k pairs with values[k]
};

// Laplacian eigensystem with the kernel pinned: smallest eigenvalue set
// to exactly 0 with eigenvector 1/sqrt(n). Requires a connected graph.
LaplacianEigen laplacian_eigen(const Graph& g);

// Closed-form R-spectra of derived graphs, built from the spectrum of
// R(g) for an r-regular, resistance regular g on n vertices:
//   double graph:   rho1/2 + n/r once, rho_i/2 for i >= 2, -1/r n times
//   lexicographic:  the same with r replaced by r + 1
// Preconditions (regularity both ways) are verified and violations throw.
Spectrum closed_form_double_spectrum(const Graph& g, double tol = 1e-9);
Spectrum closed_form_lexico_spectrum(const Graph& g, double tol = 1e-9);

// R-spectrum of K_n x K_2 (cartesian product), n >= 2:
//   (5n^2 + 2n - 4) / (n(n+2))  once
//   -2/n                        n - 1 times
//   -1                          once
//   -2/(n+2)                    n - 1 times
Spectrum complete_cartesian_k2_spectrum(int n, double tol = 1e-9);

struct QPolyResult {
  std::vector<double> coefficients;  // ascending degree
  double max_deviation = 0.0;        // max_ij |Q(R)_ij - 1|
};

// For a resistance regular graph with distinct R-eigenvalues
// k = rho_1 > rho_2 > ... > rho_t, evaluate
//   Q(x) = n * prod_{j>=2}(x - rho_j) / prod_{j>=2}(k - rho_j)
// at the float R matrix; Q(R) should be the all-one matrix.
QPolyResult q_polynomial_check(const Graph& g, double group_tol = 1e-9);

struct EigenconditionResult {
  bool regular_resistance = false;
  std::vector<double> values;  // per-vertex quantity that must be constant
  double spread = 0.0;         // max - min
};

// Resistance regularity via the Laplacian eigensystem: the per-vertex
// quantity (1/deg_i) * (sum_{j ~ i} sum_k s_ki s_kj / gamma_k + 1 - 1/n)
// equals l+_ii, so its spread is zero exactly for resistance regular
// graphs; regular_resistance = (spread < tol).
EigenconditionResult eigencondition_regularity_test(const Graph& g, double tol = 1e-8);

}  // namespace resist
