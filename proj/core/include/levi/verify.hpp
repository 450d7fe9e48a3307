#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

struct ClaimResult {
  std::string id;
  std::string category;  // classify | d | t | martinetti | star
  bool pass = false;
  std::string evidence;  // counts and certificates only, no floating point
};

struct VerifyOptions {
  int nmax = 15;                         // caps the family sizes that get checked
  std::vector<std::string> categories;   // empty = all
};

// Re-derives the classical structure results at desk scale: the census of
// the three small Levi graphs, the d-family identity with the cyclic
// {n,1,3} graphs, the closed-form witness pairs, irreducibility,
// extension/reduction round trips and the star product behaviour, plus
// cross-checks of the enumeration engine itself. Claim order is fixed.
std::vector<ClaimResult> verify_claim_suite(const VerifyOptions& opt = {});

bool all_pass(std::span<const ClaimResult> results);

// Number of perfect matchings of a bipartite graph by direct permanent
// expansion of the biadjacency matrix; an oracle independent of the
// backtracking enumerator. Throws NoBipartition on odd cycles.
std::uint64_t naive_permanent(const Graph& g);

}  // namespace levi
