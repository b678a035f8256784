#include "resist/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "resist/bounds.hpp"
#include "resist/edgelist.hpp"
#include "resist/errors.hpp"
#include "resist/families.hpp"
#include "resist/graph6.hpp"
#include "resist/json_io.hpp"
#include "resist/oracle.hpp"
#include "resist/products.hpp"
#include "resist/resistance.hpp"
#include "resist/spectral.hpp"

namespace resist {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  throw ParseError("input file contains no graph");
}

Graph apply_product(const Graph& g, ProductKind kind) {
  switch (kind) {
    case ProductKind::none: return g;
    case ProductKind::double_graph: return double_graph(g);
    case ProductKind::lexicographic_k2: return lexicographic_k2(g);
    case ProductKind::cartesian_k2: return cartesian_k2(g);
  }
  throw PreconditionError("unknown product kind");
}

Graph load_base(const RunConfig& cfg) {
  Graph g;
  switch (cfg.format) {
    case InputFormat::family: g = generate(parse_family_spec(cfg.input)); break;
    case InputFormat::graph6: {
      std::string line = first_line(read_file(cfg.input));
      g = parse_graph6(line);
      g.label = line;
      break;
    }
    case InputFormat::edgelist: {
      g = parse_edge_list(read_file(cfg.input));
      g.label = cfg.input;
      break;
    }
  }
  return g;
}

// Closed-form product checks against the base graph, used by verify_graph
// (scan path, base = corpus graph) and by `verify --product`.
void check_product_forms(const Graph& base, const ResistanceProfile& base_prof, double tol,
                         std::vector<std::string>& fail) {
  if (base_prof.label.kind != ClassLabel::Kind::resistance_regular) return;
  std::optional<int> r = regular_degree(base);
  if (!r) return;

  const int n = base.n;
  const Rational& k = *base_prof.label.k;

  auto check_pair = [&](const char* name, const Graph& product, const Spectrum& closed,
                        const Rational& expect_k) {
    Spectrum direct = r_spectrum(product);
    bool match = direct.values.size() == closed.values.size();
    for (size_t i = 0; match && i < direct.values.size(); ++i)
      match = std::abs(direct.values[i] - closed.values[i]) <= tol;
    if (!match) fail.push_back(std::string("product:") + name + "_spectrum");

    ResistanceProfile prod_prof = profile(product);
    bool regular_with_k = prod_prof.label.kind == ClassLabel::Kind::resistance_regular &&
                          *prod_prof.label.k == expect_k;
    if (!regular_with_k) fail.push_back(std::string("product:") + name + "_regularity");
  };

  check_pair("double", double_graph(base), closed_form_double_spectrum(base),
             k / 2 + Rational(n, *r));
  check_pair("lexico", lexicographic_k2(base), closed_form_lexico_spectrum(base),
             k / 2 + Rational(n, *r + 1));
  if (is_complete(base) && n >= 2)
    check_pair("cartesian", cartesian_k2(base), complete_cartesian_k2_spectrum(n),
               Rational(5 * n * n + 2 * n - 4, n * (n + 2)));
}

}  // namespace

std::vector<std::string> verify_graph(const Graph& g, double tol) {
  std::vector<std::string> fail;
  ResistanceProfile prof = profile(g);
  Spectrum spec = r_spectrum(g);

  for (const std::string& f : energy_identities(prof, spec).failures(tol))
    fail.push_back("identity:" + f);

  BoundsReport bounds = bounds_report(g, prof, spec, tol);
  for (const BoundEntry& e : bounds.entries) {
    if (!e.holds) fail.push_back("bound:" + e.id);
    if (e.condition_holds && e.equality != *e.condition_holds)
      fail.push_back("equality:" + e.id + (e.equality ? ":tight_without_condition" : ":condition_without_tightness"));
  }

  const bool regular = prof.label.kind == ClassLabel::Kind::resistance_regular;
  DiagPinvResult dp = diag_pinv_test(g);
  if (dp.equal != regular) fail.push_back("classification:diag_pinv_vs_row_sums");
  EigenconditionResult ec = eigencondition_regularity_test(g, 1e-8);
  if (ec.regular_resistance != dp.equal) fail.push_back("classification:eigencondition_vs_diag_pinv");

  if (regular) {
    QPolyResult qp = q_polynomial_check(g);
    if (qp.max_deviation > tol) fail.push_back("qpoly:deviation_exceeds_tolerance");
  }
  check_product_forms(g, prof, tol, fail);
  return fail;
}

namespace {

// ---- single-graph command bodies ----

int cmd_analyze(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  ResistanceProfile prof = profile(g);
  Spectrum spec = r_spectrum(g);
  BoundsReport bounds = bounds_report(g, prof, spec, cfg.tol);
  std::string name = g.label.empty() ? cfg.input : g.label;

  switch (cfg.output) {
    case OutputFormat::json: {
      json j{{"graph", name},
             {"profile", profile_to_json(prof)},
             {"spectrum", spectrum_to_json(spec)},
             {"bounds", bounds_to_json(name, bounds)["bounds"]}};
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: out << prof.R.to_csv(); break;
    case OutputFormat::text: {
      out << name << ": n=" << g.n << " m=" << g.edge_count() << '\n';
      out << "label: " << to_string(prof.label.kind);
      if (prof.label.k) out << " k=" << to_fraction_string(*prof.label.k);
      out << '\n';
      out << "resistance matrix:\n" << prof.R.to_csv();
      out << "kirchhoff: " << to_fraction_string(prof.kf) << "  s_sum: " << to_fraction_string(prof.s_sum)
          << '\n';
      out << "spectrum:";
      for (const auto& [value, mult] : spec.groups) out << ' ' << value << "(x" << mult << ")";
      out << "\nenergy: " << spec.energy << "  radius: " << spec.radius << '\n';
      out << "bounds:\n";
      for (const BoundEntry& e : bounds.entries) {
        out << "  " << e.id << ": lhs=" << e.lhs << " rhs=" << e.rhs << (e.holds ? " holds" : " VIOLATED")
            << (e.equality ? " equality" : "");
        if (e.condition_holds)
          out << " [" << e.condition_label << ": " << (*e.condition_holds ? "yes" : "no") << "]";
        out << '\n';
      }
      break;
    }
  }
  return bounds.all_hold ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  ResistanceProfile prof = profile(g);
  std::string name = g.label.empty() ? cfg.input : g.label;
  switch (cfg.output) {
    case OutputFormat::json:
      out << json{{"graph", name}, {"label", label_to_json(prof.label)}}.dump(2) << '\n';
      break;
    case OutputFormat::csv:
      out << "kind,k\n"
          << to_string(prof.label.kind) << ',' << (prof.label.k ? to_fraction_string(*prof.label.k) : "")
          << '\n';
      break;
    case OutputFormat::text:
      out << name << ": " << to_string(prof.label.kind);
      if (prof.label.k) out << " k=" << to_fraction_string(*prof.label.k);
      out << '\n';
      break;
  }
  return 0;
}

int cmd_construct(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  switch (cfg.output) {
    case OutputFormat::json: {
      json edges = json::array();
      for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
      out << json{{"graph", g.label}, {"n", g.n}, {"graph6", encode_graph6(g)}, {"edges", std::move(edges)}}
                 .dump(2)
          << '\n';
      break;
    }
    case OutputFormat::csv: out << format_edge_list(g); break;
    case OutputFormat::text: out << encode_graph6(g) << '\n'; break;
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const Graph& base, const Graph& g, std::ostream& out) {
  std::vector<std::string> fail = verify_graph(g, cfg.tol);
  if (cfg.product != ProductKind::none) {
    // The closed-form checks of the base graph cover the constructed
    // product; run them from the base's point of view as well.
    ResistanceProfile base_prof = profile(base);
    check_product_forms(base, base_prof, cfg.tol, fail);
  }
  std::string name = g.label.empty() ? cfg.input : g.label;
  if (cfg.output == OutputFormat::json) {
    out << json{{"graph", name}, {"ok", fail.empty()}, {"failures", fail}}.dump(2) << '\n';
  } else {
    for (const std::string& f : fail) out << "FAIL " << name << ": " << f << '\n';
    out << name << ": " << (fail.empty() ? "all checks passed" : std::to_string(fail.size()) + " check(s) failed")
        << '\n';
  }
  return fail.empty() ? 0 : 1;
}

int cmd_oracle_check(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  RationalMatrix direct = resistance_matrix(g);
  ForestCounts counts = count_structures(g);
  std::string name = g.label.empty() ? cfg.input : g.label;

  std::string mismatch;
  Rational trees(counts.trees);
  for (int i = 0; i < g.n && mismatch.empty(); ++i)
    for (int j = 0; j < g.n; ++j) {
      Rational want = i == j ? Rational(0) : Rational(counts.sep[i][j]) / trees;
      if (direct(i, j) != want) {
        mismatch = "r(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                   to_fraction_string(direct(i, j)) + " but oracle says " + to_fraction_string(want);
        break;
      }
    }

  if (cfg.output == OutputFormat::json) {
    json j{{"graph", name}, {"agrees", mismatch.empty()}, {"spanning_trees", counts.trees.str()}};
    if (!mismatch.empty()) j["mismatch"] = mismatch;
    out << j.dump(2) << '\n';
  } else {
    out << name << ": spanning trees = " << counts.trees.str() << '\n';
    if (mismatch.empty())
      out << "oracle agrees with the algebraic resistance matrix on all pairs\n";
    else
      out << "MISMATCH " << mismatch << '\n';
  }
  return mismatch.empty() ? 0 : 1;
}

// ---- scan ----

struct ScanRow {
  int line = 0;
  std::string text;
  ClassLabel::Kind kind = ClassLabel::Kind::neither;
  std::vector<std::string> failures;
  std::string input_error;
};

ScanSummary merge_rows(const std::vector<ScanRow>& rows, double elapsed) {
  ScanSummary sum;
  sum.elapsed_seconds = elapsed;
  for (const ScanRow& row : rows) {
    ++sum.total;
    switch (row.kind) {
      case ClassLabel::Kind::resistance_regular: ++sum.resistance_regular; break;
      case ClassLabel::Kind::pseudo_resistance_regular: ++sum.pseudo_resistance_regular; break;
      case ClassLabel::Kind::neither: ++sum.neither; break;
    }
    for (const std::string& f : row.failures) {
      std::string entry = "line " + std::to_string(row.line) + " (" + row.text + "): " + f;
      if (f.rfind("bound:", 0) == 0)
        sum.bound_violations.push_back(std::move(entry));
      else if (f.rfind("equality:", 0) == 0)
        sum.equality_mismatches.push_back(std::move(entry));
      else
        sum.verify_failures.push_back(std::move(entry));
    }
  }
  return sum;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format != InputFormat::graph6)
    throw PreconditionError("scan reads graph6 corpora (one graph per line)");
  std::istringstream in(read_file(cfg.input));

  std::vector<ScanRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ScanRow row;
    row.line = line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    row.text = line;
    rows.push_back(std::move(row));
  }

  auto t0 = std::chrono::steady_clock::now();
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      ScanRow& row = rows[i];
      try {
        Graph g = parse_graph6(row.text);
        g.label = row.text;
        row.kind = profile(g).label.kind;
        row.failures = verify_graph(g, cfg.tol);
      } catch (const ParseError& e) {
        row.input_error = e.what();
      } catch (const PreconditionError& e) {
        row.input_error = e.what();
      } catch (const Error& e) {
        row.failures.push_back(std::string("error:") + e.what());
      }
    }
  };
  size_t workers = std::min(static_cast<size_t>(cfg.workers), std::max<size_t>(rows.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  for (const ScanRow& row : rows)
    if (!row.input_error.empty()) {
      err << "scan: line " << row.line << " (" << row.text << "): " << row.input_error << '\n';
      return 2;
    }

  ScanSummary sum = merge_rows(rows, elapsed);
  switch (cfg.output) {
    case OutputFormat::json: {
      json j{{"total", sum.total},
             {"resistance_regular", sum.resistance_regular},
             {"pseudo_resistance_regular", sum.pseudo_resistance_regular},
             {"neither", sum.neither},
             {"bound_violations", sum.bound_violations},
             {"equality_mismatches", sum.equality_mismatches},
             {"verify_failures", sum.verify_failures},
             {"elapsed_seconds", sum.elapsed_seconds}};
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "total,resistance_regular,pseudo_resistance_regular,neither,bound_violations,"
             "equality_mismatches,verify_failures,elapsed_seconds\n"
          << sum.total << ',' << sum.resistance_regular << ',' << sum.pseudo_resistance_regular << ','
          << sum.neither << ',' << sum.bound_violations.size() << ',' << sum.equality_mismatches.size()
          << ',' << sum.verify_failures.size() << ',' << sum.elapsed_seconds << '\n';
      break;
    case OutputFormat::text:
      out << "scanned " << sum.total << " graphs in " << std::fixed << std::setprecision(2)
          << sum.elapsed_seconds << "s\n"
          << "  resistance regular: " << sum.resistance_regular << '\n'
          << "  pseudo resistance regular: " << sum.pseudo_resistance_regular << '\n'
          << "  neither: " << sum.neither << '\n';
      for (const std::string& v : sum.bound_violations) out << "  bound violation: " << v << '\n';
      for (const std::string& v : sum.equality_mismatches) out << "  equality mismatch: " << v << '\n';
      for (const std::string& v : sum.verify_failures) out << "  verify failure: " << v << '\n';
      if (sum.clean()) out << "  no violations\n";
      break;
  }
  return sum.clean() ? 0 : 1;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == Command::scan) return cmd_scan(cfg, out, err);

  Graph base = load_base(cfg);
  Graph g = apply_product(base, cfg.product);
  switch (cfg.command) {
    case Command::analyze: return cmd_analyze(cfg, g, out);
    case Command::classify: return cmd_classify(cfg, g, out);
    case Command::construct: return cmd_construct(cfg, g, out);
    case Command::verify: return cmd_verify(cfg, base, g, out);
    case Command::oracle_check: return cmd_oracle_check(cfg, g, out);
    case Command::scan: break;
  }
  throw PreconditionError("unknown command");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!(cfg.tol > 0)) throw PreconditionError("tolerance must be positive");
    if (cfg.workers < 1) throw PreconditionError("worker count must be at least 1");
    if (cfg.input.empty()) throw PreconditionError("no input given");

    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path);
      if (!file) throw ParseError("cannot open output file: " + *cfg.out_path);
      return dispatch(cfg, file, err);
    }
    return dispatch(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace resist
