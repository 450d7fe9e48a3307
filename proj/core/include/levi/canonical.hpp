#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

// Canonical certificate: a byte string equal for two graphs iff they are
// isomorphic. Computed by colour refinement plus individualization search,
// taking the minimum leaf certificate. Exact at any size; tuned for the
// graph orders that appear here (up to roughly a hundred vertices).
std::string canonical_form(const Graph& g);

// Permutation realising the certificate: position k in the canonical order
// is occupied by vertex canonical_labeling(g)[k].
std::vector<int> canonical_labeling(const Graph& g);

// Vertex map a -> b when isomorphic (f[v] is the b-vertex for a-vertex v).
std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace levi
