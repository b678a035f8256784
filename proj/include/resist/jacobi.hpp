#pragma once

#include <vector>

namespace resist {

// Dense symmetric matrix of doubles, row-major.
class FloatMatrix {
 public:
  FloatMatrix() = default;
  FloatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct EigenResult {
  std::vector<double> values;  // descending
  FloatMatrix vectors;         // column k pairs with values[k]
};

// Cyclic Jacobi rotations. Requires a symmetric matrix (checked to 1e-12
// relative); throws ConvergenceError if the off-diagonal mass has not
// dropped below 1e-12 * frobenius(m) within 100 sweeps.
std::vector<double> symmetric_eigenvalues(const FloatMatrix& m);
EigenResult symmetric_eigensystem(const FloatMatrix& m);

}  // namespace resist
