#include "resist/edgelist.hpp"

#include <sstream>
#include <string>

#include "resist/errors.hpp"

namespace resist {

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;

  auto strip = [](std::string s) {
    if (size_t hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };

  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string keyword;
      if (!(fields >> keyword >> n) || keyword != "n" || !(fields >> std::ws).eof())
        throw ParseError("edge list: header must be 'n <vertex count>'");
      if (n < 1) throw ParseError("edge list: need at least one vertex");
      continue;
    }
    int u, v;
    if (!(fields >> u >> v) || !(fields >> std::ws).eof())
      throw ParseError("edge list: bad edge line '" + line + "'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("edge list: vertex id out of range in '" + line + "' (ids are 1-based)");
    edges.push_back({u - 1, v - 1});
  }
  if (n < 0) throw ParseError("edge list: missing 'n <vertex count>' header");
  return make_graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.n << '\n';
  for (auto [u, v] : g.edges) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace resist
