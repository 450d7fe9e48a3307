#include "levi/families.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "levi/errors.hpp"

namespace levi {

namespace {

std::string sub(const char* kind, int i, int j) {
  return std::string(kind) + "_" + std::to_string(i) + "^" + std::to_string(j);
}

struct Builder {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::map<std::string, int> index;

  int add(std::string lab) {
    int id = static_cast<int>(labels.size());
    auto [it, fresh] = index.emplace(lab, id);
    if (!fresh) fail(errc::invalid_parameter, "duplicate label " + lab);
    labels.push_back(std::move(lab));
    return id;
  }
  int at(const std::string& lab) const {
    auto it = index.find(lab);
    if (it == index.end()) fail(errc::invalid_parameter, "unknown label " + lab);
    return it->second;
  }
  void link(const std::string& a, const std::string& b) { edges.push_back({at(a), at(b)}); }
  Graph build() {
    const int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
  }
};

// Hexagon segment u^1 u^2 u^3 u^4 v^2 v^1, chained by three parallel links.
void append_chain(Builder& b, int m) {
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= 4; ++j) b.add(sub("u", i, j));
    for (int j = 1; j <= 2; ++j) b.add(sub("v", i, j));
    b.link(sub("u", i, 1), sub("u", i, 2));
    b.link(sub("u", i, 2), sub("u", i, 3));
    b.link(sub("u", i, 3), sub("u", i, 4));
    b.link(sub("u", i, 4), sub("v", i, 2));
    b.link(sub("v", i, 2), sub("v", i, 1));
    b.link(sub("v", i, 1), sub("u", i, 1));
    if (i > 1) {
      b.link(sub("v", i - 1, 1), sub("u", i, 1));
      b.link(sub("v", i - 1, 2), sub("u", i, 4));
      b.link(sub("u", i - 1, 3), sub("u", i, 2));
    }
  }
}

struct TEdge {
  const char* a;
  int ja;
  const char* b;
  int jb;
};

// One T block: three u-to-w "hooks", a t1 hub over the x's, a y/z weave and
// a t2 hub over the v's. u^j and v^j are the open degree-2 ends.
constexpr TEdge kTBlock[] = {
    {"u", 1, "w", 1}, {"u", 1, "w", 2}, {"u", 2, "w", 1}, {"u", 2, "w", 3},
    {"u", 3, "w", 2}, {"u", 3, "w", 3}, {"w", 1, "x", 1}, {"w", 2, "x", 2},
    {"w", 3, "x", 3}, {"x", 1, "t", 1}, {"x", 2, "t", 1}, {"x", 3, "t", 1},
    {"x", 1, "y", 1}, {"x", 2, "y", 2}, {"x", 3, "y", 3}, {"y", 1, "z", 1},
    {"y", 1, "z", 2}, {"y", 2, "z", 1}, {"y", 2, "z", 3}, {"y", 3, "z", 2},
    {"y", 3, "z", 3}, {"z", 1, "v", 1}, {"z", 2, "v", 2}, {"z", 3, "v", 3},
    {"t", 2, "v", 1}, {"t", 2, "v", 2}, {"t", 2, "v", 3},
};

void append_t_block(Builder& b, int i) {
  for (int j = 1; j <= 3; ++j) b.add(sub("u", i, j));
  for (int j = 1; j <= 3; ++j) b.add(sub("w", i, j));
  for (int j = 1; j <= 3; ++j) b.add(sub("x", i, j));
  for (int j = 1; j <= 2; ++j) b.add(sub("t", i, j));
  for (int j = 1; j <= 3; ++j) b.add(sub("y", i, j));
  for (int j = 1; j <= 3; ++j) b.add(sub("z", i, j));
  for (int j = 1; j <= 3; ++j) b.add(sub("v", i, j));
  for (const TEdge& e : kTBlock) b.link(sub(e.a, i, e.ja), sub(e.b, i, e.jb));
}

}  // namespace

Configuration cyclic_configuration(const CyclicParams& p) {
  if (p.n < 3) fail(errc::invalid_parameter, "cyclic configuration needs n >= 3");
  auto norm = [&](int x) { return ((x % p.n) + p.n) % p.n; };
  int b = norm(p.b), c = norm(p.c);
  if (b == 0 || c == 0 || b == c)
    fail(errc::invalid_parameter, "base line residues {0, b, c} must be distinct mod n");
  Configuration conf;
  conf.points = p.n;
  // line j is the translate of the base line by j; keep that indexing
  for (int j = 0; j < p.n; ++j) {
    std::array<int, 3> ln{j, norm(j + b), norm(j + c)};
    std::sort(ln.begin(), ln.end());
    conf.lines.push_back(ln);
  }
  conf.validate();
  return conf;
}

Graph cyclic_levi(const CyclicParams& p) { return levi(cyclic_configuration(p)); }

Graph k33() {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 1; i <= 3; ++i) labels.push_back("p" + std::to_string(i));
  for (int j = 1; j <= 3; ++j) labels.push_back("l" + std::to_string(j));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) edges.push_back({i, 3 + j});
  return Graph(6, std::move(edges), std::move(labels));
}

Graph heawood() { return cyclic_levi({7, 1, 3}); }

Graph pappus() {
  // 18-cycle plus nine chords
  constexpr int chords[][2] = {{1, 6},  {2, 9},  {3, 14}, {4, 11}, {5, 16},
                               {7, 12}, {8, 15}, {10, 17}, {13, 18}};
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int k = 1; k <= 18; ++k) labels.push_back("v" + std::to_string(k));
  for (int k = 0; k < 18; ++k) edges.push_back({k, (k + 1) % 18});
  for (auto& ch : chords) edges.push_back({ch[0] - 1, ch[1] - 1});
  return Graph(18, std::move(edges), std::move(labels));
}

Graph segment_chain(int m) {
  if (m < 1) fail(errc::invalid_parameter, "segment chain needs m >= 1");
  Builder b;
  append_chain(b, m);
  return b.build();
}

Graph d_graph(int n) {
  if (n < 7) fail(errc::invalid_parameter, "d_graph needs n >= 7");
  Builder b;
  int r = n % 3;
  int m = (n - r) / 3;
  append_chain(b, m);
  if (r == 0) {
    b.link(sub("u", 1, 1), sub("v", m, 1));
    b.link(sub("u", 1, 4), sub("v", m, 2));
    b.link(sub("u", 1, 2), sub("u", m, 3));
  } else if (r == 1) {
    b.add(sub("w", m, 1));
    b.add(sub("w", m, 2));
    b.link(sub("u", 1, 1), sub("w", m, 1));
    b.link(sub("u", 1, 2), sub("v", m, 2));
    b.link(sub("u", 1, 4), sub("w", m, 2));
    b.link(sub("w", m, 1), sub("w", m, 2));
    b.link(sub("w", m, 1), sub("u", m, 3));
    b.link(sub("w", m, 2), sub("v", m, 1));
  } else {
    for (int j = 1; j <= 4; ++j) b.add(sub("w", m, j));
    b.link(sub("v", m, 1), sub("w", m, 1));
    b.link(sub("v", m, 2), sub("w", m, 4));
    b.link(sub("u", m, 3), sub("w", m, 2));
    b.link(sub("u", 1, 1), sub("w", m, 4));
    b.link(sub("u", 1, 2), sub("w", m, 1));
    b.link(sub("u", 1, 4), sub("w", m, 3));
    b.link(sub("w", m, 1), sub("w", m, 2));
    b.link(sub("w", m, 2), sub("w", m, 3));
    b.link(sub("w", m, 3), sub("w", m, 4));
  }
  return b.build();
}

Graph t_segment() {
  Builder b;
  append_t_block(b, 1);
  return b.build();
}

Graph t_graph(int n, int variant) {
  if (n < 1) fail(errc::invalid_parameter, "t_graph needs n >= 1");
  if (variant < 1 || variant > 3) fail(errc::invalid_parameter, "t_graph variant must be 1, 2 or 3");
  Builder b;
  for (int i = 1; i <= n; ++i) {
    append_t_block(b, i);
    if (i > 1)
      for (int j = 1; j <= 3; ++j) b.link(sub("v", i - 1, j), sub("u", i, j));
  }
  constexpr int closure[3][3][2] = {
      {{1, 1}, {2, 2}, {3, 3}},
      {{3, 1}, {2, 2}, {1, 3}},
      {{1, 3}, {2, 1}, {3, 2}},
  };
  for (const auto& pair : closure[variant - 1])
    b.link(sub("u", 1, pair[0]), sub("v", n, pair[1]));
  return b.build();
}

Graph star_product(const Graph& a, int x, const Graph& b, int y,
                   const std::array<int, 3>& pairing) {
  if (!is_cubic(a) || !is_cubic(b)) fail(errc::not_cubic, "star product needs two cubic factors");
  if (x < 0 || x >= a.vertex_count() || y < 0 || y >= b.vertex_count())
    fail(errc::invalid_parameter, "star product vertex out of range");
  std::array<int, 3> check = pairing;
  std::sort(check.begin(), check.end());
  if (check != std::array<int, 3>{0, 1, 2})
    fail(errc::invalid_parameter, "pairing must be a permutation of {0,1,2}");

  const int na = a.vertex_count();
  auto map_a = [&](int v) { return v - (v > x ? 1 : 0); };
  auto map_b = [&](int v) { return na - 1 + v - (v > y ? 1 : 0); };
  std::vector<Edge> edges;
  for (const Edge& e : a.edges())
    if (e.u != x && e.v != x) edges.push_back({map_a(e.u), map_a(e.v)});
  for (const Edge& e : b.edges())
    if (e.u != y && e.v != y) edges.push_back({map_b(e.u), map_b(e.v)});
  const auto& nx = a.neighbors(x);
  const auto& ny = b.neighbors(y);
  for (int k = 0; k < 3; ++k)
    edges.push_back({map_a(nx[static_cast<size_t>(k)]),
                     map_b(ny[static_cast<size_t>(pairing[static_cast<size_t>(k)])])});

  std::vector<std::string> labels;
  if (a.labeled() && b.labeled()) {
    for (int v = 0; v < na; ++v)
      if (v != x) labels.push_back("a:" + a.label(v));
    for (int v = 0; v < b.vertex_count(); ++v)
      if (v != y) labels.push_back("b:" + b.label(v));
  }
  Graph out(na + b.vertex_count() - 2, std::move(edges), std::move(labels));
  if (is_bipartite(a) && is_bipartite(b) && !is_bipartite(out))
    fail(errc::bipartiteness_broken, "star product of bipartite factors lost bipartiteness");
  return out;
}

}  // namespace levi
