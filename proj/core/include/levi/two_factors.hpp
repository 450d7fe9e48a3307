#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "levi/graph.hpp"

namespace levi {

struct PerfectMatching {
  std::vector<int> edges;  // edge ids, ascending
};

enum class Parity : std::uint8_t { even, odd };

// Spanning 2-regular subgraph; in a cubic graph exactly the complement of a
// perfect matching.
struct TwoFactor {
  std::vector<int> edges;  // edge ids, ascending
  CircuitDecomposition decomposition;
  int circuit_count = 0;
  Parity parity = Parity::even;
};

struct EnumBudget {
  enum class Mode { full, early_exit_parity };
  Mode mode = Mode::full;
  // Full mode defaults to 10'000'000 matchings; nullopt means unlimited.
  std::optional<std::uint64_t> max_matchings = 10'000'000;

  static EnumBudget full() { return {}; }
  static EnumBudget parity() { return {Mode::early_exit_parity, std::nullopt}; }
};

struct MatchingSummary {
  std::uint64_t count = 0;
  bool truncated = false;  // stopped by max_matchings with at least one more matching found
  bool stopped = false;    // visitor asked to stop
};

// Exhaustive backtracking over perfect matchings in a fixed deterministic
// order: always branch on the lowest-index uncovered vertex, try its
// available edges ascending by edge id, and propagate forced edges (an
// uncovered vertex left with a single available edge) before branching.
// The visitor returns false to stop early. Works on any graph.
using MatchingVisitor = std::function<bool(const PerfectMatching&)>;
MatchingSummary enumerate_perfect_matchings(const Graph& g, const MatchingVisitor& visit,
                                            std::optional<std::uint64_t> max_matchings = std::nullopt);

// Complement bijection. Pre: g cubic, m a perfect matching of g.
TwoFactor two_factor_of(const Graph& g, const PerfectMatching& m);

struct ClassificationReport {
  std::string graph6;
  int vertices = 0;
  int edges = 0;
  EnumBudget budget;
  // False only when the enumeration hit its budget before the verdict was
  // settled; the flags then describe the visited prefix.
  bool conclusive = true;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_circuit_count;
  std::map<std::vector<int>, std::uint64_t> by_profile;  // circuit-length multiset census
  bool has_two_factor = false;
  // Universally quantified flags, vacuously true when no 2-factor exists;
  // hamiltonian => isomorphic => pseudo always holds.
  bool two_factor_hamiltonian = false;
  bool two_factor_isomorphic = false;
  bool pseudo_two_factor_isomorphic = false;
  // First odd-count and first even-count 2-factor in enumeration order.
  std::optional<TwoFactor> odd_witness;
  std::optional<TwoFactor> even_witness;
};

// Full census or early-exit parity scan of all 2-factors. Pre: g cubic and
// connected. early_exit_parity stops as soon as both parities are
// witnessed; its flags agree with full-mode flags whenever both conclude.
ClassificationReport classify(const Graph& g, const EnumBudget& budget = EnumBudget::full());

// (odd, even) pair of 2-factors with different circuit-count parity, or
// nullopt when all 2-factors agree (the graph is pseudo 2-factor
// isomorphic). Pre: g cubic.
std::optional<std::pair<TwoFactor, TwoFactor>> find_parity_witnesses(const Graph& g);

}  // namespace levi
