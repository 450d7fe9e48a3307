#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "levi/errors.hpp"
#include "levi/families.hpp"
#include "levi/graph_io.hpp"

using namespace levi;

namespace {

errc code_of(const std::string& line) {
  try {
    from_graph6(line);
  } catch (const Error& e) {
    return e.code();
  }
  return errc::out_of_range;  // sentinel: no throw
}

}  // namespace

TEST_CASE("frozen graph6 strings") {
  CHECK(to_graph6(k33()) == "EFz_");
  CHECK(to_graph6(heawood()) == "M???E`gL?sP_P_g_?");
  // path 0-1-2 plus an isolated vertex pins the bit order within a byte
  Graph p(4, {{0, 1}, {1, 2}});
  CHECK(to_graph6(p) == "Cg");
}

TEST_CASE("graph6 round trips") {
  for (const Graph& g : {k33(), heawood(), pappus(), d_graph(12), t_graph(2, 3)}) {
    Graph back = from_graph6(to_graph6(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
  Graph empty(0, {});
  CHECK(from_graph6(to_graph6(empty)).vertex_count() == 0);
  Graph isolated(5, {});
  CHECK(from_graph6(to_graph6(isolated)).edge_count() == 0);
}

TEST_CASE("long form header appears exactly at 63 vertices") {
  Graph g62 = cyclic_levi({31, 1, 3});  // 62 vertices
  CHECK(to_graph6(g62)[0] != '~');
  Graph g80 = cyclic_levi({40, 1, 3});  // 80 vertices
  std::string s = to_graph6(g80);
  CHECK(s.substr(0, 4) == "~?@O");
  CHECK(s.size() == 4 + (80 * 79 / 2 + 5) / 6);
  Graph back = from_graph6(s);
  CHECK(back.vertex_count() == 80);
  CHECK(back.edges() == g80.edges());
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK(code_of("") == errc::parse_error);
  CHECK(code_of("E") == errc::parse_error);        // truncated body
  CHECK(code_of("EFz_X") == errc::parse_error);    // trailing bytes
  CHECK(code_of("EFz ") == errc::parse_error);     // byte below alphabet
  CHECK(code_of(std::string("EFz") + static_cast<char>(127)) == errc::parse_error);
  CHECK(code_of("A`") == errc::parse_error);       // nonzero padding bits
  CHECK(code_of("~??D??") == errc::parse_error);   // long form used for small n
  try {
    from_graph6("EFz_X");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
}

TEST_CASE("graph6 accepts exact padding") {
  CHECK(from_graph6("A_").edge_count() == 1);  // n=2, single edge, 5 pad bits zero
  CHECK(from_graph6("A?").edge_count() == 0);
}

TEST_CASE("edge list round trips") {
  Graph g = pappus();
  std::string text = to_edgelist(g);
  Graph back = from_edgelist(text);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list rejects malformed input") {
  CHECK_THROWS_AS(from_edgelist(""), Error);
  CHECK_THROWS_AS(from_edgelist("2 1\n0\n"), Error);       // missing endpoint
  CHECK_THROWS_AS(from_edgelist("2 1\n0 1\n0 1\n"), Error);  // trailing bytes
  CHECK_THROWS_AS(from_edgelist("2 2\n0 1\n"), Error);     // fewer edges than declared
  CHECK_THROWS_AS(from_edgelist("x 1\n"), Error);
  try {
    from_edgelist("2 1\n0 2\n");
    FAIL("expected endpoint range error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_graph);
  }
}

TEST_CASE("incremental reads consume graphs back to back") {
  std::string text = to_edgelist(k33()) + to_edgelist(heawood());
  size_t pos = 0;
  Graph a = read_edgelist(text, pos);
  Graph b = read_edgelist(text, pos);
  CHECK(a.vertex_count() == 6);
  CHECK(b.vertex_count() == 14);
  CHECK(pos == text.size());
  CHECK(a.edges() == k33().edges());
  CHECK(b.edges() == heawood().edges());
}
