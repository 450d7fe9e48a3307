#include "levi/report_json.hpp"

#include <json.hpp>

#include "levi/graph_io.hpp"

namespace levi {

namespace {

// Witness edges as endpoint pairs so the line is self-contained; edge ids
// reconstruct as positions in the sorted edge list.
nlohmann::ordered_json witness_edges(const TwoFactor& tf, const Graph& g) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int e : tf.edges) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

}  // namespace

std::string classification_report_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph6;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["total_two_factors"] = r.total;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.by_circuit_count) counts[std::to_string(k)] = v;
  j["by_circuit_count"] = counts;
  j["flags"] = {
      {"has_two_factor", r.has_two_factor},
      {"two_factor_hamiltonian", r.two_factor_hamiltonian},
      {"two_factor_isomorphic", r.two_factor_isomorphic},
      {"pseudo_two_factor_isomorphic", r.pseudo_two_factor_isomorphic},
  };
  nlohmann::ordered_json wits = nlohmann::ordered_json::array();
  if (r.odd_witness || r.even_witness) {
    Graph g = from_graph6(r.graph6);
    for (const std::optional<TwoFactor>* slot : {&r.odd_witness, &r.even_witness}) {
      if (!*slot) continue;
      const TwoFactor& tf = **slot;
      nlohmann::ordered_json w;
      w["parity"] = tf.parity == Parity::odd ? "odd" : "even";
      w["circuit_count"] = tf.circuit_count;
      w["lengths"] = tf.decomposition.lengths;
      w["edges"] = witness_edges(tf, g);
      wits.push_back(w);
    }
  }
  j["witnesses"] = wits;
  j["conclusive"] = r.conclusive;
  return j.dump();
}

}  // namespace levi
