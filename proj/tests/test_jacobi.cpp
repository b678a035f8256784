#include <cmath>
#include <random>

#include "doctest.h"
#include "resist/errors.hpp"
#include "resist/families.hpp"
#include "resist/jacobi.hpp"
#include "resist/matrix.hpp"
#include "resist/resistance.hpp"

using namespace resist;

namespace {

FloatMatrix to_float(const RationalMatrix& m) {
  FloatMatrix f(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) f(i, j) = to_double(m(i, j));
  return f;
}

FloatMatrix random_symmetric(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  FloatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("tiny spectra") {
  FloatMatrix swap2(2, 2);
  swap2(0, 1) = swap2(1, 0) = 1.0;
  auto v = symmetric_eigenvalues(swap2);
  CHECK(v.size() == 2);
  CHECK(v[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v[1] == doctest::Approx(-1.0).epsilon(1e-12));

  FloatMatrix diag(3, 3);
  diag(0, 0) = 3;
  diag(1, 1) = 1;
  diag(2, 2) = 2;
  auto d = symmetric_eigenvalues(diag);
  CHECK(d == std::vector<double>{3, 2, 1});  // already diagonal: exact

  FloatMatrix zero(4, 4);
  auto z = symmetric_eigenvalues(zero);
  for (double x : z) CHECK(x == 0.0);
}

TEST_CASE("analytic 2x2") {
  // [[a, b], [b, c]] has eigenvalues (a+c)/2 +- sqrt(((a-c)/2)^2 + b^2)
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 20; ++t) {
    double a = u(rng), b = u(rng), c = u(rng);
    FloatMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = m(1, 0) = b;
    m(1, 1) = c;
    double mid = (a + c) / 2, rad = std::sqrt((a - c) * (a - c) / 4 + b * b);
    auto v = symmetric_eigenvalues(m);
    CHECK(v[0] == doctest::Approx(mid + rad).epsilon(1e-12));
    CHECK(v[1] == doctest::Approx(mid - rad).epsilon(1e-12));
  }
}

TEST_CASE("resistance matrix of K4") {
  // R(K4) = (1/2)(J - I): eigenvalues 3/2 and -1/2 (multiplicity 3)
  auto v = symmetric_eigenvalues(to_float(resistance_matrix(generate({Family::complete, {4}}))));
  CHECK(v[0] == doctest::Approx(1.5).epsilon(1e-10));
  for (int k = 1; k < 4; ++k) CHECK(v[k] == doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("reconstruction and orthonormality") {
  std::mt19937 rng(7);
  for (int n : {1, 2, 3, 5, 10, 25, 50}) {
    FloatMatrix m = random_symmetric(n, rng);
    EigenResult e = symmetric_eigensystem(m);
    REQUIRE(static_cast<int>(e.values.size()) == n);

    // descending order
    for (int k = 1; k < n; ++k) CHECK(e.values[k - 1] >= e.values[k]);

    double scale = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));

    // m == V diag(values) V^T
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double sum = 0;
        for (int k = 0; k < n; ++k) sum += e.vectors(i, k) * e.values[k] * e.vectors(j, k);
        CHECK(std::abs(sum - m(i, j)) < 1e-8 * std::max(1.0, scale));
      }

    // V^T V == I
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double dot = 0;
        for (int i = 0; i < n; ++i) dot += e.vectors(i, a) * e.vectors(i, b);
        CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-10);
      }
  }
}

TEST_CASE("eigenvector equation") {
  std::mt19937 rng(20);
  FloatMatrix m = random_symmetric(8, rng);
  EigenResult e = symmetric_eigensystem(m);
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 8; ++i) {
      double lhs = 0;
      for (int j = 0; j < 8; ++j) lhs += m(i, j) * e.vectors(j, k);
      CHECK(lhs == doctest::Approx(e.values[k] * e.vectors(i, k)).epsilon(1e-8).scale(10.0));
    }
}

TEST_CASE("asymmetric input is rejected") {
  FloatMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0 + 1e-3;
  CHECK_THROWS_AS(symmetric_eigenvalues(m), PreconditionError);
  CHECK_THROWS_AS(symmetric_eigenvalues(FloatMatrix(2, 3)), PreconditionError);
}
