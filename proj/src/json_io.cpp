#include "resist/json_io.hpp"

namespace resist {

using nlohmann::json;

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back({{"num", num(m(i, j)).str()}, {"den", den(m(i, j)).str()}});
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json label_to_json(const ClassLabel& label) {
  json j{{"kind", to_string(label.kind)}};
  j["k"] = label.k ? json(to_fraction_string(*label.k)) : json(nullptr);
  return j;
}

json profile_to_json(const ResistanceProfile& prof) {
  json row_sums = json::array();
  for (const Rational& r : prof.rdeg) row_sums.push_back(to_fraction_string(r));
  return {{"n", prof.n()},
          {"label", label_to_json(prof.label)},
          {"row_sums", std::move(row_sums)},
          {"kirchhoff", to_fraction_string(prof.kf)},
          {"s_sum", to_fraction_string(prof.s_sum)}};
}

json spectrum_to_json(const Spectrum& spec) {
  json groups = json::array();
  for (const auto& [value, mult] : spec.groups) groups.push_back(json::array({value, mult}));
  return {{"groups", std::move(groups)}, {"energy", spec.energy}, {"radius", spec.radius}};
}

json bounds_to_json(const std::string& graph_name, const BoundsReport& report) {
  json entries = json::array();
  for (const BoundEntry& e : report.entries) {
    json obj{{"id", e.id},       {"lhs", e.lhs},           {"rhs", e.rhs},
             {"holds", e.holds}, {"equality", e.equality}, {"condition_holds", nullptr}};
    if (e.condition_holds) obj["condition_holds"] = *e.condition_holds;
    if (e.rhs_literal) obj["rhs_literal"] = *e.rhs_literal;
    entries.push_back(std::move(obj));
  }
  return {{"graph", graph_name}, {"bounds", std::move(entries)}};
}

}  // namespace resist
