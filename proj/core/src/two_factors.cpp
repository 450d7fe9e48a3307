#include "levi/two_factors.hpp"

#include <algorithm>

#include "levi/errors.hpp"
#include "levi/graph_io.hpp"

namespace levi {

namespace {

// Backtracking state with a kill journal so edge removals undo in O(1) per
// entry. Invariant: every alive edge has both endpoints uncovered.
struct Enumerator {
  const Graph& g;
  const MatchingVisitor& visit;
  std::optional<std::uint64_t> max_matchings;
  MatchingSummary summary;

  std::vector<char> alive, covered;
  std::vector<int> alive_deg;
  std::vector<int> journal;  // killed edge ids
  std::vector<int> chosen;   // matched edge ids in pick order
  std::vector<int> dirty;    // vertices whose alive_deg dropped

  explicit Enumerator(const Graph& graph, const MatchingVisitor& v,
                      std::optional<std::uint64_t> cap)
      : g(graph), visit(v), max_matchings(cap) {
    alive.assign(static_cast<size_t>(g.edge_count()), 1);
    covered.assign(static_cast<size_t>(g.vertex_count()), 0);
    alive_deg.resize(static_cast<size_t>(g.vertex_count()));
    for (int v2 = 0; v2 < g.vertex_count(); ++v2)
      alive_deg[static_cast<size_t>(v2)] = g.degree(v2);
  }

  void kill(int e) {
    alive[static_cast<size_t>(e)] = 0;
    journal.push_back(e);
    for (int w : {g.edge(e).u, g.edge(e).v}) {
      --alive_deg[static_cast<size_t>(w)];
      dirty.push_back(w);
    }
  }

  void take(int e) {
    chosen.push_back(e);
    for (int w : {g.edge(e).u, g.edge(e).v}) {
      covered[static_cast<size_t>(w)] = 1;
      for (int f : g.incident_edges(w))
        if (alive[static_cast<size_t>(f)]) kill(f);
    }
  }

  // take e, then keep taking forced edges; false on a dead end
  bool take_and_propagate(int e) {
    dirty.clear();
    take(e);
    while (!dirty.empty()) {
      int w = dirty.back();
      dirty.pop_back();
      if (covered[static_cast<size_t>(w)]) continue;
      int d = alive_deg[static_cast<size_t>(w)];
      if (d == 0) return false;
      if (d == 1) {
        for (int f : g.incident_edges(w))
          if (alive[static_cast<size_t>(f)]) {
            take(f);
            break;
          }
      }
    }
    return true;
  }

  void undo(size_t journal_mark, size_t chosen_mark) {
    while (chosen.size() > chosen_mark) {
      int e = chosen.back();
      chosen.pop_back();
      covered[static_cast<size_t>(g.edge(e).u)] = 0;
      covered[static_cast<size_t>(g.edge(e).v)] = 0;
    }
    while (journal.size() > journal_mark) {
      int e = journal.back();
      journal.pop_back();
      alive[static_cast<size_t>(e)] = 1;
      ++alive_deg[static_cast<size_t>(g.edge(e).u)];
      ++alive_deg[static_cast<size_t>(g.edge(e).v)];
    }
  }

  // false = stop the whole enumeration
  bool run() {
    int v = -1;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (!covered[static_cast<size_t>(u)]) {
        v = u;
        break;
      }
    if (v < 0) {
      if (max_matchings && summary.count == *max_matchings) {
        summary.truncated = true;  // one more exists beyond the budget
        return false;
      }
      ++summary.count;
      PerfectMatching m{chosen};
      std::sort(m.edges.begin(), m.edges.end());
      if (!visit(m)) {
        summary.stopped = true;
        return false;
      }
      return true;
    }
    std::vector<int> branch;
    for (int e : g.incident_edges(v))
      if (alive[static_cast<size_t>(e)]) branch.push_back(e);
    for (int e : branch) {
      size_t jm = journal.size(), cm = chosen.size();
      bool ok = take_and_propagate(e);
      if (ok && !run()) {
        undo(jm, cm);
        return false;
      }
      undo(jm, cm);
    }
    return true;
  }
};

}  // namespace

MatchingSummary enumerate_perfect_matchings(const Graph& g, const MatchingVisitor& visit,
                                            std::optional<std::uint64_t> max_matchings) {
  if (g.vertex_count() % 2 == 1) return {};
  Enumerator en(g, visit, max_matchings);
  en.run();
  return en.summary;
}

TwoFactor two_factor_of(const Graph& g, const PerfectMatching& m) {
  if (!is_cubic(g)) fail(errc::not_cubic, "2-factors via matching complement need a cubic graph");
  std::vector<char> in(static_cast<size_t>(g.edge_count()), 0);
  for (int e : m.edges) {
    if (e < 0 || e >= g.edge_count()) fail(errc::not_perfect_matching, "edge id out of range");
    if (in[static_cast<size_t>(e)]) fail(errc::not_perfect_matching, "repeated edge");
    in[static_cast<size_t>(e)] = 1;
  }
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  for (int e : m.edges) {
    ++deg[static_cast<size_t>(g.edge(e).u)];
    ++deg[static_cast<size_t>(g.edge(e).v)];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[static_cast<size_t>(v)] != 1)
      fail(errc::not_perfect_matching,
           "vertex " + g.display(v) + " is covered " + std::to_string(deg[static_cast<size_t>(v)]) +
               " times");
  TwoFactor tf;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!in[static_cast<size_t>(e)]) tf.edges.push_back(e);
  tf.decomposition = decompose(g, tf.edges);
  tf.circuit_count = static_cast<int>(tf.decomposition.circuits.size());
  tf.parity = tf.circuit_count % 2 == 1 ? Parity::odd : Parity::even;
  return tf;
}

ClassificationReport classify(const Graph& g, const EnumBudget& budget) {
  if (!is_cubic(g)) fail(errc::not_cubic, "classification needs a cubic graph");
  if (!is_connected(g)) fail(errc::disconnected_input, "classification needs a connected graph");
  ClassificationReport r;
  r.graph6 = to_graph6(g);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.budget = budget;

  const bool early = budget.mode == EnumBudget::Mode::early_exit_parity;
  MatchingSummary s = enumerate_perfect_matchings(
      g,
      [&](const PerfectMatching& m) {
        TwoFactor tf = two_factor_of(g, m);
        ++r.total;
        ++r.by_circuit_count[tf.circuit_count];
        ++r.by_profile[tf.decomposition.lengths];
        if (tf.parity == Parity::odd && !r.odd_witness) r.odd_witness = tf;
        if (tf.parity == Parity::even && !r.even_witness) r.even_witness = std::move(tf);
        return !(early && r.odd_witness && r.even_witness);
      },
      budget.max_matchings);

  bool finished = !s.truncated && !s.stopped;
  bool both = r.odd_witness.has_value() && r.even_witness.has_value();
  r.conclusive = finished || both;
  r.has_two_factor = r.total > 0;
  r.two_factor_hamiltonian =
      r.by_circuit_count.empty() ||
      (r.by_circuit_count.size() == 1 && r.by_circuit_count.begin()->first == 1);
  r.two_factor_isomorphic = r.by_profile.size() <= 1;
  r.pseudo_two_factor_isomorphic = !both;
  return r;
}

std::optional<std::pair<TwoFactor, TwoFactor>> find_parity_witnesses(const Graph& g) {
  if (!is_cubic(g)) fail(errc::not_cubic, "parity witnesses need a cubic graph");
  std::optional<TwoFactor> odd, even;
  enumerate_perfect_matchings(g, [&](const PerfectMatching& m) {
    TwoFactor tf = two_factor_of(g, m);
    if (tf.parity == Parity::odd && !odd) odd = std::move(tf);
    else if (tf.parity == Parity::even && !even) even = std::move(tf);
    return !(odd && even);
  });
  if (odd && even) return std::make_pair(std::move(*odd), std::move(*even));
  return std::nullopt;
}

}  // namespace levi
