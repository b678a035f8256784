#pragma once

#include "resist/graph.hpp"
#include "resist/matrix.hpp"

namespace resist {

// Exact inverse by Gauss-Jordan with full pivoting (first nonzero entry of
// the active submatrix in row-major order; exact arithmetic needs no
// magnitude rule). Throws SingularMatrixError with the rank on failure.
RationalMatrix invert(const RationalMatrix& m);

// Moore-Penrose inverse of the Laplacian of a connected graph via the
// J-shift: L^+ = (L + J/n)^{-1} - J/n. Exact; satisfies all four Penrose
// identities and L L^+ = I - J/n.
RationalMatrix laplacian_pinv(const Graph& g);

// Pseudoinverse for the block shapes the two {1}-inverse routes produce:
// matrices of the form cI - dJ (closed form) and symmetric zero-row-sum
// blocks whose kernel is spanned by the all-one vector (J-shift); plain
// inverse when nonsingular. Anything else is rejected with a diagnostic.
RationalMatrix block_pseudo_inverse(const RationalMatrix& s);

// {1}-inverse [L1^{-1} 0; 0 S^+] with S = L3 - L2^T L1^{-1} L2, valid when
// every column of L2^T is all -1 or all 0. `split` is the order of L1.
RationalMatrix one_inverse_block_zero(const RationalMatrix& laplacian, int split);

// {1}-inverse from the Schur complement M = L1 - L2 L3^{-1} L2^T, valid when
// the trailing block L3 is nonsingular.
RationalMatrix one_inverse_schur(const RationalMatrix& laplacian, int split);

}  // namespace resist
