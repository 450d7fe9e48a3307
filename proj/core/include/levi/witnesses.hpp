#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "levi/graph.hpp"
#include "levi/two_factors.hpp"

namespace levi {

// Symbolic vertex path over the labelled family graphs. The pattern is a
// space separated list of labels where {i}, {i-1} and {m} are substituted
// at instantiation time, e.g. "u_{i}^1 u_{i}^2 ... v_{i}^1".
struct PathTemplate {
  std::string name;
  std::string pattern;
  bool circuit = false;
};

std::span<const PathTemplate> witness_templates();
const PathTemplate& witness_template(std::string_view name);

// Symbol substitution and label lookup only; edge existence is checked by
// concat. Throws TemplateInvalid on an unknown label.
Path instantiate(const PathTemplate& t, const Graph& host, int i, int m);

// Joins open paths end to start, requiring a host edge at every junction
// (MissingJunctionEdge otherwise) and distinct vertices (VertexReuse).
// final_vertex, when given, is appended the same way; if the sequence then
// ends where it began, the duplicate is dropped and the result is a
// circuit. A single already-closed circuit part is validated and passed
// through.
Path concat(const Graph& g, std::span<const Path> parts,
            std::optional<int> final_vertex = std::nullopt);

// Assembles a 2-factor from vertex-disjoint spanning circuits, then
// re-derives its decomposition from the edge set as a cross-check.
TwoFactor two_factor_from_circuits(const Graph& g, std::span<const Path> circuits);

// A pair of 2-factors of opposite parity on one of the family graphs: a
// hamiltonian circuit and a 2-circuit member. Built from the closed-form
// path templates; when those fail to embed (from_template = false,
// template_error says why) the pair is recovered by enumeration instead.
struct WitnessPair {
  std::string family;  // "d" or "t"
  int n = 0;
  int variant = 0;  // t only
  Graph host;
  TwoFactor hamiltonian;   // circuit_count == 1
  TwoFactor disconnected;  // circuit_count == 2
  bool from_template = true;
  std::string template_error;
};

WitnessPair d_witness_pair(int n);                 // n >= 8
WitnessPair t_witness_pair(int n, int variant);    // n >= 1, variant in {1,2,3}

// Same builders against a caller-supplied host graph; the host must carry
// the family labels. Exposed so a deliberately perturbed host exercises
// the enumeration fallback.
WitnessPair d_witness_pair_on(Graph host, int n);
WitnessPair t_witness_pair_on(Graph host, int n, int variant);

}  // namespace levi
