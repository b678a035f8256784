#include "resist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "resist/errors.hpp"

namespace resist {

namespace {

constexpr const char* kCondRegular = "resistance regular";
constexpr const char* kCondPseudo = "pseudo resistance regular";
constexpr const char* kCondComplete = "complete";

BoundEntry make_entry(std::string id, double lhs, double rhs, double tol, std::string condition_label,
                      std::optional<bool> condition_holds) {
  BoundEntry e;
  e.id = std::move(id);
  e.lhs = lhs;
  e.rhs = rhs;
  e.holds = lhs <= rhs + tol;
  e.equality = std::abs(lhs - rhs) <= tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  e.condition_label = std::move(condition_label);
  e.condition_holds = condition_holds;
  return e;
}

}  // namespace

BoundsReport bounds_report(const Graph& g, double tol) {
  ResistanceProfile prof = profile(g);
  return bounds_report(g, prof, r_spectrum(g), tol);
}

BoundsReport bounds_report(const Graph& g, const ResistanceProfile& prof, const Spectrum& spec,
                           double tol) {
  if (tol <= 0) throw PreconditionError("bounds_report: tolerance must be positive");
  const int n = prof.n();
  if (n < 2) throw PreconditionError("bounds_report: need at least 2 vertices");

  const double rho1 = spec.radius;
  const double energy = spec.energy;
  const double kf = to_double(prof.kf);
  const double s = to_double(prof.s_sum);

  Rational rdeg_sq = 0, second_sq = 0;
  for (int i = 0; i < n; ++i) {
    rdeg_sq += prof.rdeg[i] * prof.rdeg[i];
    second_sq += prof.second[i] * prof.second[i];
  }
  const double rowsum_rms = std::sqrt(to_double(rdeg_sq) / n);
  const double alpha = std::sqrt(to_double(second_sq / rdeg_sq));

  std::vector<double> avg(n);
  for (int i = 0; i < n; ++i) avg[i] = to_double(prof.avg[i]);
  double max_avg = *std::max_element(avg.begin(), avg.end());
  double min_pair = std::numeric_limits<double>::infinity();
  double max_pair = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double p = std::sqrt(avg[i] * avg[j]);
      min_pair = std::min(min_pair, p);
      max_pair = std::max(max_pair, p);
    }

  const bool regular = prof.label.kind == ClassLabel::Kind::resistance_regular;
  const bool pseudo = regular || prof.label.kind == ClassLabel::Kind::pseudo_resistance_regular;
  const bool complete = is_complete(g);

  BoundsReport report;
  auto add = [&](BoundEntry e) {
    report.all_hold = report.all_hold && e.holds;
    report.entries.push_back(std::move(e));
  };

  add(make_entry("KF_LOWER", 2.0 * kf / n, rho1, tol, kCondRegular, regular));
  add(make_entry("ROWSUM_LOWER", rowsum_rms, rho1, tol, kCondRegular, regular));
  add(make_entry("WEIGHTED_ROWSUM_UPPER", rho1, max_avg, tol, kCondRegular, regular));
  add(make_entry("TI_LOWER", alpha, rho1, tol, kCondPseudo, pseudo));
  {
    BoundEntry e = make_entry("ALPHA_ENERGY_UPPER", energy,
                              alpha + std::sqrt((n - 1) * std::max(0.0, s - alpha * alpha)), tol,
                              kCondComplete, complete);
    e.rhs_literal = alpha + std::sqrt((n - 1) * std::max(0.0, s - alpha));
    add(std::move(e));
  }
  add(make_entry("AVG_DEG_UPPER", rho1, max_pair, tol, kCondPseudo, pseudo));
  add(make_entry("AVG_DEG_LOWER", min_pair, rho1, tol, kCondPseudo, pseudo));
  add(make_entry("ENERGY_ROWSUM_LOWER", 2.0 * rowsum_rms, energy, tol, kCondRegular, regular));
  add(make_entry("ENERGY_KF_LOWER", 4.0 * kf / n, energy, tol, kCondRegular, regular));
  add(make_entry("KF_SPECTRAL_UPPER", kf, std::sqrt(n * (n - 1.0) * s) / 2.0, tol, "", std::nullopt));

  return report;
}

IdentityReport energy_identities(const Graph& g) {
  ResistanceProfile prof = profile(g);
  return energy_identities(prof, r_spectrum(g));
}

IdentityReport energy_identities(const ResistanceProfile& prof, const Spectrum& spec) {
  const int n = prof.n();
  IdentityReport rep;
  rep.energy = spec.energy;
  rep.twice_radius = 2.0 * spec.radius;

  Rational second_total = 0, rdeg_sq = 0;
  for (int i = 0; i < n; ++i) {
    second_total += prof.second[i];
    rdeg_sq += prof.rdeg[i] * prof.rdeg[i];
  }
  rep.ti_sum_exact = second_total == rdeg_sq;

  double trace = 0, moment = 0;
  for (double v : spec.values) {
    trace += v;
    moment += v * v;
  }
  rep.trace_gap = std::abs(trace);
  rep.moment_gap = std::abs(moment - to_double(prof.s_sum));

  if (prof.label.kind == ClassLabel::Kind::resistance_regular) {
    const Rational& k = *prof.label.k;
    rep.twice_k = 2.0 * to_double(k);
    rep.kf_half_nk = prof.kf == k * n / 2;
  }

  double min_pair = std::numeric_limits<double>::infinity();
  double max_pair = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double p = std::sqrt(to_double(prof.avg[i]) * to_double(prof.avg[j]));
      min_pair = std::min(min_pair, p);
      max_pair = std::max(max_pair, p);
    }
  rep.energy_lower = 2.0 * min_pair;
  rep.energy_upper = 2.0 * max_pair;
  return rep;
}

std::vector<std::string> IdentityReport::failures(double tol) const {
  std::vector<std::string> out;
  if (!ti_sum_exact) out.push_back("sum_Ti_equals_sum_Ri_squared");
  if (std::abs(energy - twice_radius) > tol) out.push_back("energy_equals_twice_radius");
  if (trace_gap > tol) out.push_back("spectrum_trace_zero");
  if (moment_gap > tol) out.push_back("spectrum_second_moment");
  if (twice_k && std::abs(energy - *twice_k) > tol) out.push_back("energy_equals_twice_k");
  if (kf_half_nk && !*kf_half_nk) out.push_back("kirchhoff_equals_half_nk");
  if (energy < energy_lower - tol || energy > energy_upper + tol)
    out.push_back("energy_avg_degree_sandwich");
  return out;
}

}  // namespace resist
