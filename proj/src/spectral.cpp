#include "resist/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "resist/errors.hpp"
#include "resist/rational.hpp"
#include "resist/resistance.hpp"

namespace resist {

namespace {

FloatMatrix to_float_matrix(const RationalMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  std::vector<double> flat = m.to_doubles();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = flat[static_cast<size_t>(i) * m.cols() + j];
  return out;
}

}  // namespace

std::vector<double> Spectrum::distinct() const {
  std::vector<double> out;
  out.reserve(groups.size());
  for (const auto& [value, mult] : groups) out.push_back(value);
  return out;
}

Spectrum group_eigenvalues(std::vector<double> values, double tol) {
  if (tol <= 0) throw PreconditionError("group_eigenvalues: tolerance must be positive");
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum spec;
  spec.values = values;
  size_t start = 0;
  for (size_t i = 1; i <= values.size(); ++i) {
    bool boundary = i == values.size() ||
                    std::abs(values[i - 1] - values[i]) >= tol * std::max(1.0, std::abs(values[i - 1]));
    if (!boundary) continue;
    double sum = 0;
    for (size_t k = start; k < i; ++k) sum += values[k];
    spec.groups.push_back({sum / static_cast<double>(i - start), static_cast<int>(i - start)});
    start = i;
  }
  for (double v : values) spec.energy += std::abs(v);
  spec.radius = values.empty() ? 0.0 : values.front();
  return spec;
}

Spectrum r_spectrum(const Graph& g, double tol) {
  require_connected(g, "r_spectrum");
  if (g.n < 2) throw PreconditionError("r_spectrum: need at least 2 vertices");
  Spectrum spec = group_eigenvalues(symmetric_eigenvalues(to_float_matrix(resistance_matrix(g))), tol);
  int positive = 0;
  for (const auto& [value, mult] : spec.groups)
    if (value > 0) ++positive;
  if (positive != 1)
    throw Error("r_spectrum: expected exactly one positive eigenvalue group, found " +
                std::to_string(positive));
  return spec;
}

LaplacianEigen laplacian_eigen(const Graph& g) {
  require_connected(g, "laplacian_eigen");
  EigenResult eig = symmetric_eigensystem(to_float_matrix(laplacian(g)));
  const int n = g.n;
  // Connected graphs: gamma_n = 0 is simple with eigenvector 1/sqrt(n);
  // pin both against rounding noise.
  eig.values[n - 1] = 0.0;
  double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) eig.vectors(i, n - 1) = inv_sqrt;
  return {std::move(eig.values), std::move(eig.vectors)};
}

namespace {

// Shared scaffold for the two product-spectrum formulas: needs g to be
// degree-regular and resistance regular; `shift` is r for the double
// graph and r + 1 for the lexicographic product.
Spectrum derived_product_spectrum(const Graph& g, int shift_delta, const char* what, double tol) {
  require_connected(g, what);
  std::optional<int> r = regular_degree(g);
  if (!r) throw PreconditionError(std::string(what) + ": graph is not degree-regular");
  ResistanceProfile prof = profile(g);
  if (prof.label.kind != ClassLabel::Kind::resistance_regular)
    throw PreconditionError(std::string(what) + ": graph is not resistance regular");

  Spectrum base = r_spectrum(g, tol);
  const int n = g.n;
  const double shift = static_cast<double>(*r + shift_delta);
  std::vector<double> values;
  values.reserve(2 * n);
  values.push_back(base.values[0] / 2.0 + n / shift);
  for (int i = 1; i < n; ++i) values.push_back(base.values[i] / 2.0);
  for (int i = 0; i < n; ++i) values.push_back(-1.0 / shift);
  return group_eigenvalues(std::move(values), tol);
}

}  // namespace

Spectrum closed_form_double_spectrum(const Graph& g, double tol) {
  return derived_product_spectrum(g, 0, "closed_form_double_spectrum", tol);
}

Spectrum closed_form_lexico_spectrum(const Graph& g, double tol) {
  return derived_product_spectrum(g, 1, "closed_form_lexico_spectrum", tol);
}

Spectrum complete_cartesian_k2_spectrum(int n, double tol) {
  if (n < 2) throw PreconditionError("complete_cartesian_k2_spectrum: need n >= 2");
  std::vector<double> values;
  values.reserve(2 * n);
  values.push_back(to_double(Rational(5 * n * n + 2 * n - 4, n * (n + 2))));
  for (int i = 1; i < n; ++i) values.push_back(to_double(Rational(-2, n)));
  values.push_back(-1.0);
  for (int i = 1; i < n; ++i) values.push_back(to_double(Rational(-2, n + 2)));
  return group_eigenvalues(std::move(values), tol);
}

QPolyResult q_polynomial_check(const Graph& g, double group_tol) {
  ResistanceProfile prof = profile(g);
  if (prof.label.kind != ClassLabel::Kind::resistance_regular)
    throw PreconditionError("q_polynomial_check: graph is not resistance regular");

  Spectrum spec = r_spectrum(g, group_tol);
  std::vector<double> distinct = spec.distinct();
  const double k = to_double(*prof.label.k);  // equals the radius for these graphs
  const int n = g.n;

  // Q(x) = n * prod_{j >= 2} (x - rho_j) / (k - rho_j), ascending coefficients.
  std::vector<double> coef{1.0};
  double denom = 1.0;
  for (size_t j = 1; j < distinct.size(); ++j) {
    double root = distinct[j];
    coef.push_back(0.0);
    for (size_t d = coef.size() - 1; d > 0; --d) coef[d] = coef[d - 1] - root * coef[d];
    coef[0] *= -root;
    denom *= k - root;
  }
  for (double& c : coef) c *= n / denom;

  // Horner over matrices: Q(R) entry by entry against J.
  FloatMatrix r = to_float_matrix(prof.R);
  FloatMatrix acc(n, n);
  for (int i = 0; i < n; ++i) acc(i, i) = coef.back();
  for (size_t d = coef.size() - 1; d-- > 0;) {
    FloatMatrix next(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double sum = i == j ? coef[d] : 0.0;
        for (int l = 0; l < n; ++l) sum += r(i, l) * acc(l, j);
        next(i, j) = sum;
      }
    acc = std::move(next);
  }

  QPolyResult res;
  res.coefficients = std::move(coef);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) res.max_deviation = std::max(res.max_deviation, std::abs(acc(i, j) - 1.0));
  return res;
}

EigenconditionResult eigencondition_regularity_test(const Graph& g, double tol) {
  require_connected(g, "eigencondition_regularity_test");
  EigenconditionResult res;
  if (g.n == 1) {  // vacuously constant
    res.regular_resistance = true;
    res.values = {0.0};
    return res;
  }
  LaplacianEigen le = laplacian_eigen(g);
  auto adj = adjacency_lists(g);
  const int n = g.n;
  res.values.resize(n);
  for (int i = 0; i < n; ++i) {
    double neighbor_sum = 0;
    for (int j : adj[i])
      for (int k = 0; k < n - 1; ++k)  // nonzero eigenvalues only
        neighbor_sum += le.vectors(i, k) * le.vectors(j, k) / le.values[k];
    res.values[i] = (neighbor_sum + 1.0 - 1.0 / n) / static_cast<double>(adj[i].size());
  }
  auto [lo, hi] = std::minmax_element(res.values.begin(), res.values.end());
  res.spread = *hi - *lo;
  res.regular_resistance = res.spread < tol;
  return res;
}

}  // namespace resist
