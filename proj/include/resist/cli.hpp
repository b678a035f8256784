#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "resist/graph.hpp"

namespace resist {

enum class Command { analyze, classify, construct, verify, scan, oracle_check };
enum class InputFormat { graph6, edgelist, family };
enum class OutputFormat { json, csv, text };
enum class ProductKind { none, double_graph, lexicographic_k2, cartesian_k2 };

struct RunConfig {
  Command command = Command::analyze;
  std::string input;  // file path, or inline spec when format == family
  InputFormat format = InputFormat::graph6;
  ProductKind product = ProductKind::none;
  OutputFormat output = OutputFormat::text;
  double tol = 1e-9;  // must be > 0
  int workers = 1;    // must be >= 1
  std::optional<std::string> out_path;
};

struct ScanSummary {
  long total = 0;
  long resistance_regular = 0;
  long pseudo_resistance_regular = 0;
  long neither = 0;
  // Entries name the graph by corpus line number plus the check id.
  std::vector<std::string> bound_violations;
  std::vector<std::string> equality_mismatches;
  std::vector<std::string> verify_failures;
  double elapsed_seconds = 0.0;

  long label_total() const { return resistance_regular + pseudo_resistance_regular + neither; }
  bool clean() const {
    return bound_violations.empty() && equality_mismatches.empty() && verify_failures.empty();
  }
};

// Per-graph verification: energy identities, all bounds hold,
// equality conditions consistent with classification, Q-polynomial for
// resistance regular graphs, closed-form product spectra and regularity
// corollaries when applicable, and agreement between the pseudoinverse
// diagonal test and the eigencondition test. Returns failure messages.
std::vector<std::string> verify_graph(const Graph& g, double tol);

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad
// input or usage. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace resist
