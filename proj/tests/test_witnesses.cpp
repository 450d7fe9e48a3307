#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "levi/errors.hpp"
#include "levi/families.hpp"
#include "levi/two_factors.hpp"
#include "levi/witnesses.hpp"

using namespace levi;

namespace {

void check_pair(const WitnessPair& w, int vertices) {
  CHECK(w.host.vertex_count() == vertices);
  CHECK(w.hamiltonian.circuit_count == 1);
  CHECK(w.hamiltonian.decomposition.lengths == std::vector<int>{vertices});
  CHECK(w.disconnected.circuit_count == 2);
  int total = 0;
  for (int len : w.disconnected.decomposition.lengths) total += len;
  CHECK(total == vertices);
  // the two circuit counts witness both parities
  CHECK(w.hamiltonian.parity == Parity::odd);
  CHECK(w.disconnected.parity == Parity::even);
}

}  // namespace

TEST_CASE("template table is complete and queryable") {
  auto all = witness_templates();
  CHECK(all.size() >= 14);
  const PathTemplate& l1 = witness_template("L1");
  CHECK(l1.name == "L1");
  CHECK_FALSE(l1.circuit);
  CHECK(witness_template("C1").circuit);
  CHECK_THROWS_AS(witness_template("nope"), Error);
}

TEST_CASE("instantiate substitutes segment indices") {
  Graph host = d_graph(9);
  Path p = instantiate(witness_template("L1"), host, 2, 3);
  REQUIRE(p.vertices.size() == 6);
  CHECK(host.label(p.vertices[0]) == "u_2^1");
  CHECK(host.label(p.vertices[5]) == "v_2^1");
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
    CHECK(host.has_edge(p.vertices[i], p.vertices[i + 1]));

  Graph bare(2, {{0, 1}});
  CHECK_THROWS_AS(instantiate(witness_template("L1"), bare, 1, 1), Error);
  try {
    instantiate(witness_template("L1"), host, 9, 3);  // no segment 9
    FAIL("expected TemplateInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == errc::template_invalid);
  }
}

TEST_CASE("concat closes circuits and validates junctions") {
  Graph host = d_graph(9);  // three segments, r = 0
  Path a = instantiate(witness_template("L1"), host, 1, 3);
  Path b = instantiate(witness_template("L1"), host, 2, 3);
  Path joined = concat(host, std::vector<Path>{a, b});
  CHECK_FALSE(joined.circuit);
  CHECK(joined.vertices.size() == 12);

  // closing the walk back to its first vertex marks it a circuit
  Path closed = concat(host, std::vector<Path>{a, b,
                       instantiate(witness_template("L1"), host, 3, 3)},
                       a.vertices.front());
  CHECK(closed.circuit);
  CHECK(closed.vertices.size() == 18);

  // segment 1 does not touch segment 3 directly
  Path c = instantiate(witness_template("L1"), host, 3, 3);
  try {
    concat(host, std::vector<Path>{a, c});
    FAIL("expected MissingJunctionEdge");
  } catch (const Error& e) {
    CHECK(e.code() == errc::missing_junction_edge);
  }

  try {
    concat(host, std::vector<Path>{a, a});
    FAIL("expected VertexReuse");
  } catch (const Error& e) {
    CHECK(e.code() == errc::vertex_reuse);
  }
}

TEST_CASE("two factor assembly demands a spanning circuit family") {
  Graph host = d_graph(9);
  Path all = concat(host, std::vector<Path>{
      instantiate(witness_template("L1"), host, 1, 3),
      instantiate(witness_template("L1"), host, 2, 3),
      instantiate(witness_template("L1"), host, 3, 3)},
      0);
  REQUIRE(all.circuit);
  TwoFactor tf = two_factor_from_circuits(host, std::vector<Path>{all});
  CHECK(tf.circuit_count == 1);
  CHECK(tf.parity == Parity::odd);
  CHECK(tf.edges.size() == 18);

  Path part = instantiate(witness_template("L1"), host, 1, 3);
  part.circuit = true;  // 6 vertices only, does not span
  try {
    two_factor_from_circuits(host, std::vector<Path>{part});
    FAIL("expected TemplateInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == errc::template_invalid);
  }
}

TEST_CASE("d witness pairs for every residue up to 15") {
  for (int n = 8; n <= 15; ++n) {
    WitnessPair w = d_witness_pair(n);
    CHECK(w.family == "d");
    CHECK(w.n == n);
    CHECK(w.from_template);
    check_pair(w, 2 * n);
    // the disconnected member always splits off a hexagon
    CHECK(w.disconnected.decomposition.lengths == std::vector<int>{6, 2 * n - 6});
  }
  try {
    d_witness_pair(7);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == errc::out_of_range);
  }
}

TEST_CASE("t witness pairs for both sizes and all variants") {
  for (int n : {1, 2})
    for (int v : {1, 2, 3}) {
      WitnessPair w = t_witness_pair(n, v);
      CHECK(w.family == "t");
      CHECK(w.variant == v);
      CHECK(w.from_template);
      check_pair(w, 20 * n);
      CHECK(w.disconnected.decomposition.lengths == std::vector<int>{10, 20 * n - 10});
    }
}

TEST_CASE("template failure falls back to enumeration") {
  // break the labels so every template lookup misses, keeping the graph intact
  Graph g = d_graph(8);
  std::vector<std::string> labs;
  for (int v = 0; v < g.vertex_count(); ++v) labs.push_back("x" + std::to_string(v));
  Graph host(g.vertex_count(), std::vector<Edge>(g.edges()), std::move(labs));
  WitnessPair w = d_witness_pair_on(host, 8);
  CHECK_FALSE(w.from_template);
  CHECK_FALSE(w.template_error.empty());
  CHECK(w.hamiltonian.circuit_count == 1);
  CHECK(w.disconnected.circuit_count == 2);
}

TEST_CASE("witness circuits really live in the host graph") {
  WitnessPair w = t_witness_pair(2, 3);
  for (const TwoFactor* tf : {&w.hamiltonian, &w.disconnected})
    for (const auto& circuit : tf->decomposition.circuits)
      for (size_t i = 0; i < circuit.size(); ++i)
        CHECK(w.host.has_edge(circuit[i], circuit[(i + 1) % circuit.size()]));
}
