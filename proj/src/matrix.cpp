#include "resist/matrix.hpp"

#include <sstream>

#include "resist/errors.hpp"

namespace resist {

namespace {
void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError(std::string("shape mismatch in matrix ") + op);
}
}  // namespace

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  RationalMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw PreconditionError("ragged rows in from_rows");
    int j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  require_same_shape(*this, other, "+");
  RationalMatrix out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + other.a_[k];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  require_same_shape(*this, other, "-");
  RationalMatrix out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - other.a_[k];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw PreconditionError("shape mismatch in matrix *");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += x * other(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::has_zero_row_sums() const {
  for (const Rational& s : row_sums())
    if (s != 0) return false;
  return true;
}

std::vector<Rational> RationalMatrix::row_sums() const {
  std::vector<Rational> sums(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  return sums;
}

Rational RationalMatrix::trace() const {
  if (!square()) throw PreconditionError("trace of a non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::block(int r0, int c0, int rows, int cols) const {
  if (r0 < 0 || c0 < 0 || rows < 0 || cols < 0 || r0 + rows > rows_ || c0 + cols > cols_)
    throw PreconditionError("block out of range");
  RationalMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void RationalMatrix::set_block(int r0, int c0, const RationalMatrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw PreconditionError("set_block out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<double> RationalMatrix::to_doubles() const {
  std::vector<double> out;
  out.reserve(a_.size());
  for (const Rational& x : a_) out.push_back(to_double(x));
  return out;
}

std::string RationalMatrix::to_csv() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << to_fraction_string((*this)(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace resist
