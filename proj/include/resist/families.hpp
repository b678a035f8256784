#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "resist/graph.hpp"

namespace resist {

enum class Family {
  complete,            // K_n
  cycle,               // C_n, n >= 3
  complete_bipartite,  // K_{a,b}
  complete_multipartite,
  cocktail_party,      // CP(2p): p parts of size 2
  path,                // P_n
};

struct FamilySpec {
  Family family;
  std::vector<int> params;  // complete/cycle/path: {n}; bipartite: {a,b};
                            // multipartite: part sizes; cocktail_party: {p}
};

// Canonical vertex numbering:
//  - complete/cycle/path: natural order (cycle edge (i, i+1 mod n));
//  - complete_(bi|multi)partite: parts occupy contiguous index ranges;
//  - cocktail_party(p): vertices 2i and 2i+1 are the non-adjacent partners.
Graph generate(const FamilySpec& spec);

// Parses CLI-style specs: "complete:4", "cycle:5", "bipartite:3,3",
// "multipartite:2,2,2", "cocktail:3", "path:4".
FamilySpec parse_family_spec(std::string_view text);

std::string family_label(const FamilySpec& spec);

}  // namespace resist
