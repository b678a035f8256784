#include "resist/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "resist/errors.hpp"

namespace resist {

namespace {

double off_diagonal_norm(const FloatMatrix& a) {
  double sum = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

double frobenius(const FloatMatrix& a) {
  double sum = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

EigenResult jacobi(const FloatMatrix& m, bool want_vectors) {
  if (m.rows() != m.cols()) throw PreconditionError("eigensolver: matrix not square");
  const int n = m.rows();
  const double scale = frobenius(m);
  const double sym_tol = 1e-12 * std::max(1.0, scale);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > sym_tol)
        throw PreconditionError("eigensolver: matrix not symmetric");

  FloatMatrix a = m;
  FloatMatrix v;
  if (want_vectors) {
    v = FloatMatrix(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  }

  const double target = 1e-12 * scale;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > 100) throw ConvergenceError("eigensolver: no convergence after 100 sweeps");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = a(p, i) = c * aip - s * aiq;
          a(i, q) = a(q, i) = s * aip + c * aiq;
        }
        if (want_vectors)
          for (int i = 0; i < n; ++i) {
            double vip = v(i, p), viq = v(i, q);
            v(i, p) = c * vip - s * viq;
            v(i, q) = s * vip + c * viq;
          }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  EigenResult res;
  res.values.resize(n);
  for (int k = 0; k < n; ++k) res.values[k] = a(order[k], order[k]);
  if (want_vectors) {
    res.vectors = FloatMatrix(n, n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
  }
  return res;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const FloatMatrix& m) {
  return jacobi(m, false).values;
}

EigenResult symmetric_eigensystem(const FloatMatrix& m) {
  return jacobi(m, true);
}

}  // namespace resist
