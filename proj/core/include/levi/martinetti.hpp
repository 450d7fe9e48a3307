#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

// Extension move on a Levi graph (cubic, bipartite, girth >= 6): pick two
// disjoint edges e1 = x1y1, e2 = x2y2 with the x's on the black side, such
// that x1,x2 have no common neighbor and y1,y2 have no common neighbor.
// Delete e1 and e2, add vertices u (joined to x1, x2) and v (joined to
// y1, y2) and the edge uv. The result is again cubic, bipartite and of
// girth >= 6, two vertices larger.
struct ExtensionSite {
  int e1 = -1, e2 = -1;  // distinct edge ids
  int x1 = -1, y1 = -1;  // e1 endpoints, x1 black
  int x2 = -1, y2 = -1;  // e2 endpoints, x2 black
};

enum class RewireOption : std::uint8_t { straight, crossed };

// Inverse move at an edge uv (u < v): delete u and v, reconnect their
// remaining neighbors x0,x1 (of u, ascending) and y0,y1 (of v, ascending)
// either straight (x0y0, x1y1) or crossed (x0y1, x1y0). A site is valid
// when the result is again simple, cubic, bipartite, of girth >= 6 and
// connected.
struct ReductionSite {
  int edge = -1;
  int u = -1, v = -1;
  std::array<int, 2> x{-1, -1};
  std::array<int, 2> y{-1, -1};
  RewireOption option = RewireOption::straight;
  std::string after_certificate;  // canonical_form of the reduced graph
};

// All ordered pairs (e1, e2) forming a valid extension site, ascending by
// (e1, e2). Swapping the pair order produces the identical extended graph,
// so every unordered site appears twice.
std::vector<ExtensionSite> extension_sites(const Graph& g);

// Applies the move; the two new vertices take indices n (u, line side) and
// n+1 (v, point side). Throws InvalidSite when the site does not match g.
Graph extend(const Graph& g, const ExtensionSite& s);

std::vector<ReductionSite> reduction_sites(const Graph& g, bool allow_disconnected = false);

// Applies the rewiring; throws InvalidReduction naming the failed clause
// (multi-edge | girth | regularity | disconnected).
Graph reduce(const Graph& g, const ReductionSite& s, bool allow_disconnected = false);

// No valid reduction site at all.
bool is_irreducible(const Graph& g);

struct ExtensionClass {
  std::string certificate;     // canonical_form of the extended graph
  ExtensionSite representative;  // first site reaching the class
  int multiplicity = 0;          // ordered sites mapping to it
};

// Extension results grouped by isomorphism type, in order of first
// appearance along extension_sites(g).
std::vector<ExtensionClass> extensions_up_to_iso(const Graph& g);

}  // namespace levi
