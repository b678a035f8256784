#include "resist/graph6.hpp"

#include <string>

#include "resist/errors.hpp"

namespace resist {

namespace {
constexpr std::string_view kPrefix = ">>graph6<<";

int decode_char(char c) {
  if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  return c - 63;
}
}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
    line.remove_suffix(1);
  if (line.substr(0, kPrefix.size()) == kPrefix) line.remove_prefix(kPrefix.size());
  if (line.empty()) throw ParseError("graph6: empty line");

  size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = decode_char(line[pos++]);
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw ParseError("graph6: truncated size header");
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | decode_char(line[pos++]);
  } else {
    if (line.size() < 8) throw ParseError("graph6: truncated size header");
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | decode_char(line[pos++]);
  }
  if (n < 1) throw ParseError("graph6: empty graph rejected");
  if (n > 100000) throw ParseError("graph6: vertex count implausibly large");

  long long bits = n * (n - 1) / 2;
  long long expect = (bits + 5) / 6;
  if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != expect)
    throw ParseError("graph6: body length mismatch");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int current = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = decode_char(line[pos + bit / 6]);
      if (current & (1 << (5 - bit % 6))) edges.push_back({i, j});
    }
  // Padding bits must be zero.
  for (; bit % 6 != 0; ++bit)
    if (current & (1 << (5 - bit % 6))) throw ParseError("graph6: nonzero padding");

  return make_graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  long long n = g.n;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
  } else {
    out += "~~";
    for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
  }
  long long bits = n * (n - 1) / 2;
  std::string body((bits + 5) / 6, 0);
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (has_edge(g, i, j)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

}  // namespace resist
