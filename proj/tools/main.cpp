#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "resist/cli.hpp"

namespace {

double default_tolerance() {
  if (const char* env = std::getenv("RESIST_TOL")) {
    try {
      size_t used = 0;
      double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid RESIST_TOL='" << env << "'\n";
  }
  return 1e-9;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact resistance-distance toolkit"};
  app.require_subcommand(1);

  resist::RunConfig cfg;
  cfg.tol = default_tolerance();

  std::string input_path, family_spec, product, output = "text", out_path;

  auto add_common = [&](CLI::App* sub, bool with_product) {
    sub->add_option("-i,--input", input_path, "input file (graph6 by default)");
    sub->add_option("-f,--family", family_spec,
                    "inline family spec, e.g. complete:4, cycle:5, bipartite:3,3, "
                    "multipartite:2,2,2, cocktail:3, path:4");
    sub->add_flag_callback(
        "--edgelist", [&cfg]() { cfg.format = resist::InputFormat::edgelist; },
        "treat --input as an edge-list file");
    if (with_product)
      sub->add_option("-p,--product", product, "construct first: double | lexico_k2 | cartesian_k2")
          ->check(CLI::IsMember({"double", "lexico_k2", "cartesian_k2"}));
    sub->add_option("-o,--output", output, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-t,--tol", cfg.tol, "check tolerance (> 0); env RESIST_TOL overrides the default");
    sub->add_option("--out", out_path, "write the report to a file instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "profile + spectrum + bounds for one graph");
  add_common(analyze, true);
  auto* classify = app.add_subcommand("classify", "resistance-regularity label only");
  add_common(classify, true);
  auto* construct = app.add_subcommand("construct", "emit a family/product graph");
  add_common(construct, true);
  auto* verify = app.add_subcommand("verify", "verify closed forms, bounds, and identities");
  add_common(verify, true);
  auto* oracle = app.add_subcommand("oracle-check", "compare against the forest-counting oracle");
  add_common(oracle, true);
  auto* scan = app.add_subcommand("scan", "verify every graph in a graph6 corpus");
  add_common(scan, false);
  scan->add_option("-w,--workers", cfg.workers, "parallel workers (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed()) cfg.command = resist::Command::analyze;
  if (classify->parsed()) cfg.command = resist::Command::classify;
  if (construct->parsed()) cfg.command = resist::Command::construct;
  if (verify->parsed()) cfg.command = resist::Command::verify;
  if (oracle->parsed()) cfg.command = resist::Command::oracle_check;
  if (scan->parsed()) cfg.command = resist::Command::scan;

  if (!family_spec.empty() && !input_path.empty()) {
    std::cerr << "error: give either --input or --family, not both\n";
    return 2;
  }
  if (family_spec.empty() && input_path.empty()) {
    std::cerr << "error: an input is required (--input file or --family spec)\n";
    return 2;
  }
  if (!family_spec.empty()) {
    cfg.format = resist::InputFormat::family;
    cfg.input = family_spec;
  } else {
    cfg.input = input_path;
  }

  if (product == "double") cfg.product = resist::ProductKind::double_graph;
  else if (product == "lexico_k2") cfg.product = resist::ProductKind::lexicographic_k2;
  else if (product == "cartesian_k2") cfg.product = resist::ProductKind::cartesian_k2;

  if (output == "json") cfg.output = resist::OutputFormat::json;
  else if (output == "csv") cfg.output = resist::OutputFormat::csv;
  else cfg.output = resist::OutputFormat::text;

  if (!out_path.empty()) cfg.out_path = out_path;

  return resist::run(cfg, std::cout, std::cerr);
}
