#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resist/graph.hpp"
#include "resist/resistance.hpp"
#include "resist/spectral.hpp"

namespace resist {

struct BoundEntry {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;     // lhs <= rhs + tol
  bool equality = false;  // |lhs - rhs| <= tol * max(1, |lhs|, |rhs|)
  // The structural condition under which the bound is tight, and whether
  // this graph satisfies it; label empty / optional unset when the bound
  // comes with no stated equality condition.
  std::string condition_label;
  std::optional<bool> condition_holds;
  // Only for ALPHA_ENERGY_UPPER: the variant with S - alpha (instead of
  // S - alpha^2) under the square root, kept for inspection; the asserted
  // rhs is the alpha^2 reading, which is the one the equality case of
  // complete graphs actually closes.
  std::optional<double> rhs_literal;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;
  bool all_hold = true;
};

// Evaluate the ten spectral/energy bounds for a connected graph, n >= 2.
BoundsReport bounds_report(const Graph& g, double tol = 1e-9);
BoundsReport bounds_report(const Graph& g, const ResistanceProfile& prof, const Spectrum& spec,
                           double tol = 1e-9);

struct IdentityReport {
  double energy = 0.0;        // E_R
  double twice_radius = 0.0;  // 2 rho1; expect energy == twice_radius
  bool ti_sum_exact = false;  // sum_i T_i == sum_i R_i^2, exact rationals
  double trace_gap = 0.0;     // |sum rho_i|
  double moment_gap = 0.0;    // |sum rho_i^2 - S|
  // Present when the graph is resistance regular with constant k:
  std::optional<double> twice_k;      // 2k; expect energy == 2k
  std::optional<bool> kf_half_nk;     // exact check Kf == n*k/2
  // Energy sandwich from the averaged R-degrees:
  //   2 min_{i!=j} sqrt(avg_i avg_j) <= E_R <= 2 max_{i!=j} sqrt(avg_i avg_j)
  double energy_lower = 0.0;
  double energy_upper = 0.0;

  // Names of the identities violated at the given tolerance.
  std::vector<std::string> failures(double tol) const;
};

// Internal-consistency identities tying the exact profile to the float
// spectrum; checked for every analyzed graph. Requires n >= 2.
IdentityReport energy_identities(const Graph& g);
IdentityReport energy_identities(const ResistanceProfile& prof, const Spectrum& spec);

}  // namespace resist
