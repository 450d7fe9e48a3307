#include "levi/graph_io.hpp"

#include <cctype>

#include "levi/errors.hpp"

namespace levi {

namespace {

[[noreturn]] void parse_fail(const std::string& what, size_t offset) {
  fail(errc::parse_error, what + " at byte offset " + std::to_string(offset));
}

int graph6_char(std::string_view s, size_t i) {
  if (i >= s.size()) parse_fail("truncated graph6 data", s.size());
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) parse_fail("byte outside graph6 alphabet", i);
  return c - 63;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    fail(errc::invalid_parameter, "graph too large for the 3-byte graph6 order field");
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.empty()) parse_fail("empty graph6 line", 0);
  size_t pos = 0;
  long long n;
  if (line[0] != '~') {
    n = graph6_char(line, pos++);
  } else {
    if (line.size() > 1 && line[1] == '~')
      parse_fail("8-byte graph6 order fields are not supported", 1);
    ++pos;
    long long a = graph6_char(line, pos++);
    long long b = graph6_char(line, pos++);
    long long c = graph6_char(line, pos++);
    n = (a << 12) | (b << 6) | c;
    if (n <= 62) parse_fail("non-minimal graph6 order field", 0);
  }
  long long nbits = n * (n - 1) / 2;
  size_t groups = static_cast<size_t>((nbits + 5) / 6);
  std::vector<Edge> edges;
  int i = 0, j = 1;
  for (size_t gidx = 0; gidx < groups; ++gidx) {
    int val = graph6_char(line, pos++);
    for (int b = 5; b >= 0; --b) {
      bool bit = (val >> b) & 1;
      if (j >= n) {
        if (bit) parse_fail("nonzero padding bit", pos - 1);
        continue;
      }
      if (bit) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  if (pos != line.size()) parse_fail("trailing bytes after graph6 data", pos);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edgelist(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph read_edgelist(std::string_view text, size_t& pos) {
  auto next_int = [&]() -> long long {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) parse_fail("truncated edge list", text.size());
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      parse_fail("expected a nonnegative integer", pos);
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000'000) parse_fail("integer too large", pos);
      ++pos;
    }
    return v;
  };
  long long n = next_int();
  long long m = next_int();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long k = 0; k < m; ++k) {
    int u = static_cast<int>(next_int());
    int v = static_cast<int>(next_int());
    edges.push_back({u, v});
  }
  // leave pos on the next token (or at the end), so lists can be chained
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph from_edgelist(std::string_view text) {
  size_t pos = 0;
  Graph g = read_edgelist(text, pos);
  if (pos != text.size()) parse_fail("trailing bytes after edge list", pos);
  return g;
}

}  // namespace levi
