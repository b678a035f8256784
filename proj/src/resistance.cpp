#include "resist/resistance.hpp"

#include <algorithm>

#include "resist/errors.hpp"
#include "resist/exact.hpp"
#include "resist/products.hpp"

namespace resist {

const char* to_string(ClassLabel::Kind kind) {
  switch (kind) {
    case ClassLabel::Kind::resistance_regular: return "ResistanceRegular";
    case ClassLabel::Kind::pseudo_resistance_regular: return "PseudoResistanceRegular";
    case ClassLabel::Kind::neither: return "Neither";
  }
  return "?";
}

RationalMatrix resistance_matrix(const Graph& g) {
  require_connected(g, "resistance_matrix");
  RationalMatrix pinv = laplacian_pinv(g);
  RationalMatrix r(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      Rational v = pinv(i, i) + pinv(j, j) - pinv(i, j) - pinv(j, i);
      r(i, j) = v;
      r(j, i) = v;
    }
  return r;
}

Rational cycle_resistance(int n, int i, int j) {
  if (n < 3) throw PreconditionError("cycle_resistance: need n >= 3");
  if (i < 0 || i >= n || j < 0 || j >= n) throw PreconditionError("cycle_resistance: vertex out of range");
  int d = std::abs(i - j);
  d = std::min(d, n - d);
  return Rational((n - d) * d, n);
}

// For both products below: vertex v + a*n is copy a of vertex v, matching
// the construction in products.cpp, so the formulas can be checked
// entrywise against resistance_matrix of the built graph.

RationalMatrix double_graph_resistance(const Graph& g) {
  require_connected(g, "double_graph_resistance");
  const int n = g.n;
  RationalMatrix base = resistance_matrix(g);
  std::vector<int> deg = degrees(g);
  RationalMatrix r(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) {
      int i = a % n, j = b % n;
      Rational v = i == j ? Rational(1, deg[i])
                          : (base(i, j) + Rational(1, deg[i]) + Rational(1, deg[j])) / 4;
      r(a, b) = v;
      r(b, a) = v;
    }
  return r;
}

RationalMatrix lexicographic_k2_resistance(const Graph& g) {
  require_connected(g, "lexicographic_k2_resistance");
  const int n = g.n;
  RationalMatrix base = resistance_matrix(g);
  std::vector<int> deg = degrees(g);
  RationalMatrix r(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) {
      int i = a % n, j = b % n;
      Rational v = i == j
                       ? Rational(1, deg[i] + 1)
                       : base(i, j) / 4 + Rational(1, 4 * deg[i] + 4) + Rational(1, 4 * deg[j] + 4);
      r(a, b) = v;
      r(b, a) = v;
    }
  return r;
}

RationalMatrix complete_bipartite_nn_resistance(int n) {
  if (n < 1) throw PreconditionError("complete_bipartite_nn_resistance: need n >= 1");
  RationalMatrix r(2 * n, 2 * n);
  Rational same(2, n);                  // within a part: (2/n)(J - I)
  Rational cross(2 * n - 1, n * n);     // across parts: ((2n-1)/n^2) J
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      if (i == j) continue;
      bool same_part = (i < n) == (j < n);
      r(i, j) = same_part ? same : cross;
    }
  return r;
}

ResistanceProfile profile(const Graph& g) {
  require_connected(g, "profile");
  if (g.n < 2) throw PreconditionError("profile: single-vertex graph has no R-degrees");
  ResistanceProfile p{.R = resistance_matrix(g)};
  const int n = g.n;
  p.rdeg = p.R.row_sums();
  p.second.resize(n);
  p.avg.resize(n);
  for (int i = 0; i < n; ++i) {
    Rational t = 0;
    for (int j = 0; j < n; ++j) t += p.R(i, j) * p.rdeg[j];
    p.second[i] = t;
    p.avg[i] = t / p.rdeg[i];  // rdeg > 0 for connected n >= 2
  }
  for (int i = 0; i < n; ++i) p.kf += p.rdeg[i];
  p.kf /= 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.s_sum += p.R(i, j) * p.R(i, j);

  bool rows_equal = std::all_of(p.rdeg.begin(), p.rdeg.end(), [&](const Rational& x) { return x == p.rdeg[0]; });
  bool avgs_equal = std::all_of(p.avg.begin(), p.avg.end(), [&](const Rational& x) { return x == p.avg[0]; });
  if (rows_equal) {
    p.label.kind = ClassLabel::Kind::resistance_regular;
    p.label.k = p.rdeg[0];
    p.label.pseudo_also = p.avg[0];  // equals k: T_i = k R_i when rows are constant
  } else if (avgs_equal) {
    p.label.kind = ClassLabel::Kind::pseudo_resistance_regular;
    p.label.k = p.avg[0];
  } else {
    p.label.kind = ClassLabel::Kind::neither;
  }
  return p;
}

DiagPinvResult diag_pinv_test(const Graph& g) {
  require_connected(g, "diag_pinv_test");
  RationalMatrix pinv = laplacian_pinv(g);
  DiagPinvResult res;
  res.min_index = res.max_index = 0;
  res.min_value = res.max_value = pinv(0, 0);
  for (int i = 1; i < g.n; ++i) {
    const Rational& v = pinv(i, i);
    if (v < res.min_value) {
      res.min_value = v;
      res.min_index = i;
    }
    if (v > res.max_value) {
      res.max_value = v;
      res.max_index = i;
    }
  }
  res.equal = res.min_value == res.max_value;
  if (res.equal) {
    res.min_index = res.max_index = -1;
  }
  return res;
}

}  // namespace resist
