#include "resist/exact.hpp"

#include <string>
#include <utility>
#include <vector>

#include "resist/errors.hpp"

namespace resist {

RationalMatrix invert(const RationalMatrix& m) {
  if (!m.square()) throw PreconditionError("invert: matrix not square");
  const int n = m.rows();
  RationalMatrix a = m;
  RationalMatrix e = RationalMatrix::identity(n);
  // col_of[j]: which original column currently sits at column j of `a`.
  std::vector<int> col_of(n);
  for (int j = 0; j < n; ++j) col_of[j] = j;

  for (int k = 0; k < n; ++k) {
    // Full pivot: first nonzero of the active submatrix in row-major order.
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = k; j < n; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) throw SingularMatrixError("invert: singular matrix (rank " + std::to_string(k) + ")", k);

    if (pi != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(pi, j));
        std::swap(e(k, j), e(pi, j));
      }
    if (pj != k) {
      for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, pj));
      std::swap(col_of[k], col_of[pj]);
    }

    Rational inv_pivot = Rational(1) / a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) *= inv_pivot;
      e(k, j) *= inv_pivot;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        e(i, j) -= f * e(k, j);
      }
    }
  }

  // Row ops reduced m with permuted columns to I, so e inverts that
  // permuted matrix; undo the permutation: inverse row col_of[k] is e row k.
  RationalMatrix inv(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) inv(col_of[k], j) = e(k, j);
  return inv;
}

RationalMatrix laplacian_pinv(const Graph& g) {
  require_connected(g, "laplacian_pinv");
  const int n = g.n;
  const Rational inv_n = Rational(1, n);
  RationalMatrix shifted = laplacian(g) + RationalMatrix::ones(n, n).scaled(inv_n);
  return invert(shifted) - RationalMatrix::ones(n, n).scaled(inv_n);
}

namespace {

// alpha*I + beta*J, detected entrywise.
bool uniform_pattern(const RationalMatrix& s, Rational& alpha, Rational& beta) {
  const int n = s.rows();
  Rational diag = s(0, 0);
  Rational off = n > 1 ? s(0, 1) : Rational(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s(i, j) != (i == j ? diag : off)) return false;
  beta = off;
  alpha = diag - off;
  return true;
}

RationalMatrix uniform_pinv(int n, const Rational& alpha, const Rational& beta) {
  // Eigenvalues: alpha + beta*n on the all-one vector, alpha on its
  // complement; invert the nonzero ones.
  Rational on_ones = alpha + beta * n;
  Rational inv_alpha = alpha == 0 ? Rational(0) : Rational(1) / alpha;
  Rational inv_ones = on_ones == 0 ? Rational(0) : Rational(1) / on_ones;
  // pinv = inv_alpha * (I - J/n) + inv_ones * J/n
  Rational j_coef = (inv_ones - inv_alpha) / n;
  RationalMatrix out = RationalMatrix::identity(n).scaled(inv_alpha);
  return out + RationalMatrix::ones(n, n).scaled(j_coef);
}

}  // namespace

RationalMatrix block_pseudo_inverse(const RationalMatrix& s) {
  if (!s.square()) throw PreconditionError("block_pseudo_inverse: matrix not square");
  const int n = s.rows();

  Rational alpha, beta;
  if (uniform_pattern(s, alpha, beta)) return uniform_pinv(n, alpha, beta);

  if (s.is_symmetric() && s.has_zero_row_sums()) {
    RationalMatrix j_over_n = RationalMatrix::ones(n, n).scaled(Rational(1, n));
    try {
      return invert(s + j_over_n) - j_over_n;
    } catch (const SingularMatrixError&) {
      throw PreconditionError(
          "block_pseudo_inverse: zero-row-sum block has a kernel beyond the all-one vector");
    }
  }

  try {
    return invert(s);
  } catch (const SingularMatrixError&) {
    throw PreconditionError(
        "block_pseudo_inverse: singular block is neither uniform (cI - dJ) nor symmetric with zero "
        "row sums");
  }
}

namespace {

void check_split(const RationalMatrix& l, int split, const char* where) {
  if (!l.square()) throw PreconditionError(std::string(where) + ": matrix not square");
  if (split < 1 || split >= l.rows())
    throw PreconditionError(std::string(where) + ": split must leave both blocks nonempty");
}

void check_one_inverse(const RationalMatrix& l, const RationalMatrix& m, const char* where) {
  if (l * m * l != l) throw Error(std::string(where) + ": construction failed LML = L");
}

}  // namespace

RationalMatrix one_inverse_block_zero(const RationalMatrix& laplacian, int split) {
  check_split(laplacian, split, "one_inverse_block_zero");
  const int n = laplacian.rows();
  const int s = n - split;

  // Columns of the bottom-left block must each be all -1 or all 0.
  for (int j = 0; j < split; ++j) {
    const Rational& first = laplacian(split, j);
    if (first != 0 && first != -1)
      throw PreconditionError("one_inverse_block_zero: bottom-left column " + std::to_string(j) +
                              " is neither all -1 nor all 0");
    for (int i = split + 1; i < n; ++i)
      if (laplacian(i, j) != first)
        throw PreconditionError("one_inverse_block_zero: bottom-left column " + std::to_string(j) +
                                " is neither all -1 nor all 0");
  }

  RationalMatrix l1 = laplacian.block(0, 0, split, split);
  RationalMatrix l2 = laplacian.block(0, split, split, s);
  RationalMatrix l2t = laplacian.block(split, 0, s, split);
  RationalMatrix l3 = laplacian.block(split, split, s, s);

  RationalMatrix l1_inv = invert(l1);
  RationalMatrix schur = l3 - l2t * l1_inv * l2;

  RationalMatrix out(n, n);
  out.set_block(0, 0, l1_inv);
  out.set_block(split, split, block_pseudo_inverse(schur));
  check_one_inverse(laplacian, out, "one_inverse_block_zero");
  return out;
}

RationalMatrix one_inverse_schur(const RationalMatrix& laplacian, int split) {
  check_split(laplacian, split, "one_inverse_schur");
  const int n = laplacian.rows();
  const int s = n - split;

  RationalMatrix l1 = laplacian.block(0, 0, split, split);
  RationalMatrix l2 = laplacian.block(0, split, split, s);
  RationalMatrix l2t = laplacian.block(split, 0, s, split);
  RationalMatrix l3 = laplacian.block(split, split, s, s);

  RationalMatrix l3_inv;
  try {
    l3_inv = invert(l3);
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError("one_inverse_schur: trailing block is singular", e.rank);
  }

  RationalMatrix m = l1 - l2 * l3_inv * l2t;
  RationalMatrix m_pinv = block_pseudo_inverse(m);

  RationalMatrix top_right = (m_pinv * l2 * l3_inv).scaled(-1);
  RationalMatrix bottom_left = (l3_inv * l2t * m_pinv).scaled(-1);
  RationalMatrix bottom_right = l3_inv + l3_inv * l2t * m_pinv * l2 * l3_inv;

  RationalMatrix out(n, n);
  out.set_block(0, 0, m_pinv);
  out.set_block(0, split, top_right);
  out.set_block(split, 0, bottom_left);
  out.set_block(split, split, bottom_right);
  check_one_inverse(laplacian, out, "one_inverse_schur");
  return out;
}

}  // namespace resist
