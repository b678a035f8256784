#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "resist/rational.hpp"

namespace resist {

// Dense matrix of exact rationals, row-major. Small and value-semantic:
// every graph this library touches has at most a few dozen vertices.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);
  static RationalMatrix ones(int rows, int cols);  // the all-one matrix J
  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RationalMatrix& other) const = default;

  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix scaled(const Rational& c) const;
  RationalMatrix transposed() const;

  // Verified entrywise on every call; never a stale cached flag.
  bool is_symmetric() const;
  bool has_zero_row_sums() const;
  std::vector<Rational> row_sums() const;
  Rational trace() const;

  RationalMatrix block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const RationalMatrix& b);

  // Row-major nearest-double rendering for the spectral side.
  std::vector<double> to_doubles() const;

  // CSV with entries serialized "p/q", one row per line.
  std::string to_csv() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace resist
