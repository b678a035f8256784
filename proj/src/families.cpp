#include "resist/families.hpp"

#include <numeric>
#include <sstream>

#include "resist/errors.hpp"

namespace resist {

namespace {
Graph complete_multipartite(const std::vector<int>& parts, const std::string& label) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (size_t p = 0; p < parts.size(); ++p)
    for (int k = 0; k < parts[p]; ++k) part_of.push_back(static_cast<int>(p));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) edges.push_back({i, j});
  return make_graph(n, std::move(edges), label);
}
}  // namespace

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](size_t k, const char* what) {
    if (p.size() != k) throw PreconditionError(std::string("family ") + what + ": wrong parameter count");
    for (int x : p)
      if (x < 1) throw PreconditionError(std::string("family ") + what + ": parameters must be positive");
  };
  switch (spec.family) {
    case Family::complete: {
      need(1, "complete");
      int n = p[0];
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      return make_graph(n, std::move(edges), family_label(spec));
    }
    case Family::cycle: {
      need(1, "cycle");
      int n = p[0];
      if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      return make_graph(n, std::move(edges), family_label(spec));
    }
    case Family::path: {
      need(1, "path");
      int n = p[0];
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return make_graph(n, std::move(edges), family_label(spec));
    }
    case Family::complete_bipartite: {
      need(2, "bipartite");
      return complete_multipartite({p[0], p[1]}, family_label(spec));
    }
    case Family::complete_multipartite: {
      if (p.size() < 2) throw PreconditionError("multipartite needs at least two parts");
      for (int x : p)
        if (x < 1) throw PreconditionError("multipartite: part sizes must be positive");
      return complete_multipartite(p, family_label(spec));
    }
    case Family::cocktail_party: {
      need(1, "cocktail");
      int parts = p[0];
      if (parts < 2) throw PreconditionError("cocktail party needs at least 2 pairs");
      // Pairs (2i, 2i+1) are the unique non-neighbors.
      return complete_multipartite(std::vector<int>(parts, 2), family_label(spec));
    }
  }
  throw PreconditionError("unknown family");
}

FamilySpec parse_family_spec(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec needs 'name:params'");
  std::string name(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);

  FamilySpec spec;
  if (name == "complete")
    spec.family = Family::complete;
  else if (name == "cycle")
    spec.family = Family::cycle;
  else if (name == "path")
    spec.family = Family::path;
  else if (name == "bipartite")
    spec.family = Family::complete_bipartite;
  else if (name == "multipartite")
    spec.family = Family::complete_multipartite;
  else if (name == "cocktail")
    spec.family = Family::cocktail_party;
  else
    throw ParseError("unknown family '" + name + "'");

  if (rest.empty()) throw ParseError("family spec '" + name + "' has no parameters");
  std::istringstream in{std::string(rest)};
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      spec.params.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("bad family parameter '" + token + "'");
    }
  }
  return spec;
}

std::string family_label(const FamilySpec& spec) {
  std::ostringstream os;
  switch (spec.family) {
    case Family::complete: os << "K_" << spec.params[0]; break;
    case Family::cycle: os << "C_" << spec.params[0]; break;
    case Family::path: os << "P_" << spec.params[0]; break;
    case Family::complete_bipartite: os << "K_{" << spec.params[0] << "," << spec.params[1] << "}"; break;
    case Family::complete_multipartite: {
      os << "K_{";
      for (size_t i = 0; i < spec.params.size(); ++i) os << (i ? "," : "") << spec.params[i];
      os << "}";
      break;
    }
    case Family::cocktail_party: os << "CP(" << 2 * spec.params[0] << ")"; break;
  }
  return os.str();
}

}  // namespace resist
