#include "levi/witnesses.hpp"

#include <algorithm>
#include <array>

#include "levi/errors.hpp"
#include "levi/families.hpp"

namespace levi {

namespace {

// Segment traversals of the hexagon chain (L*, M*, N*) and of the T blocks
// (P*, Q*); C* are closed circuits. M1 spans chain segments 1..3, M2 the
// last segment plus the two-vertex closure gadget, NW the four-vertex one.
const PathTemplate kTemplates[] = {
    {"L1", "u_{i}^1 u_{i}^2 u_{i}^3 u_{i}^4 v_{i}^2 v_{i}^1", false},
    {"L2", "u_{i}^4 u_{i}^3 u_{i}^2 u_{i}^1 v_{i}^1 v_{i}^2", false},
    {"M1", "u_1^4 v_1^2 u_2^4 u_2^3 u_3^2 u_3^3 u_3^4 v_2^2 v_2^1 u_3^1 v_3^1 v_3^2", false},
    {"M2", "u_{m}^4 v_{m}^2 v_{m}^1 u_{m}^1 u_{m}^2 u_{m}^3 w_{m}^1 w_{m}^2 u_1^4", false},
    {"NI", "u_{i}^2 u_{i}^1 v_{i-1}^1 v_{i-1}^2 u_{i}^4 u_{i}^3", false},
    {"NW", "w_{m}^2 w_{m}^1 v_{m}^1 v_{m}^2 w_{m}^4 w_{m}^3 u_1^4 v_1^2 u_2^4 u_2^3", false},
    {"W2", "w_{m}^2 w_{m}^1", false},
    {"W4", "w_{m}^1 w_{m}^2 w_{m}^3 w_{m}^4", false},
    {"C1", "u_1^1 u_1^2 u_1^3 u_2^2 u_2^1 v_1^1", true},
    {"C2", "u_1^1 u_1^2 u_1^3 u_1^4 w_{m}^2 w_{m}^1", true},
    {"C3", "v_1^1 v_1^2 u_2^4 v_2^2 v_2^1 u_3^1 v_3^1 v_3^2 u_3^4 u_3^3 u_3^2 u_2^3 u_2^2 u_2^1",
     true},
    {"P1",
     "u_{i}^2 w_{i}^1 u_{i}^1 w_{i}^2 u_{i}^3 w_{i}^3 x_{i}^3 y_{i}^3 z_{i}^3 v_{i}^3 t_{i}^2 "
     "v_{i}^1 z_{i}^1 y_{i}^2 x_{i}^2 t_{i}^1 x_{i}^1 y_{i}^1 z_{i}^2 v_{i}^2",
     false},
    {"P2", "u_{i}^2 w_{i}^1 u_{i}^1 w_{i}^2 u_{i}^3 w_{i}^3 x_{i}^3 y_{i}^3 z_{i}^2 v_{i}^2", false},
    {"P3", "v_{i}^1 t_{i}^2 v_{i}^3 z_{i}^3 y_{i}^2 x_{i}^2 t_{i}^1 x_{i}^1 y_{i}^1 z_{i}^1", true},
    {"Q1",
     "u_{i}^3 w_{i}^3 u_{i}^2 w_{i}^1 u_{i}^1 w_{i}^2 x_{i}^2 y_{i}^2 z_{i}^3 v_{i}^3 t_{i}^2 "
     "v_{i}^1 z_{i}^1 y_{i}^1 x_{i}^1 t_{i}^1 x_{i}^3 y_{i}^3 z_{i}^2 v_{i}^2",
     false},
    {"Q2", "u_{i}^3 w_{i}^2 u_{i}^1 w_{i}^1 u_{i}^2 w_{i}^3 x_{i}^3 y_{i}^3 z_{i}^2 v_{i}^2", false},
};

void substitute(std::string& token, std::string_view key, int value) {
  for (size_t pos; (pos = token.find(key)) != std::string::npos;)
    token.replace(pos, key.size(), std::to_string(value));
}

}  // namespace

std::span<const PathTemplate> witness_templates() { return kTemplates; }

const PathTemplate& witness_template(std::string_view name) {
  for (const PathTemplate& t : kTemplates)
    if (t.name == name) return t;
  fail(errc::invalid_parameter, "unknown template " + std::string(name));
}

Path instantiate(const PathTemplate& t, const Graph& host, int i, int m) {
  if (!host.labeled()) fail(errc::template_invalid, "host graph carries no labels");
  Path p;
  p.circuit = t.circuit;
  size_t pos = 0;
  while (pos < t.pattern.size()) {
    size_t end = t.pattern.find(' ', pos);
    if (end == std::string::npos) end = t.pattern.size();
    std::string token = t.pattern.substr(pos, end - pos);
    pos = end + 1;
    if (token.empty()) continue;
    substitute(token, "{i-1}", i - 1);
    substitute(token, "{i}", i);
    substitute(token, "{m}", m);
    auto v = host.vertex_by_label(token);
    if (!v)
      fail(errc::template_invalid,
           "template " + t.name + " refers to missing vertex " + token);
    p.vertices.push_back(*v);
  }
  return p;
}

Path concat(const Graph& g, std::span<const Path> parts, std::optional<int> final_vertex) {
  if (parts.empty()) fail(errc::invalid_parameter, "nothing to concatenate");
  Path out;
  if (parts.size() == 1 && parts[0].circuit) {
    if (final_vertex) fail(errc::invalid_parameter, "cannot extend a closed circuit");
    out = parts[0];
  } else {
    for (const Path& p : parts) {
      if (p.circuit) fail(errc::invalid_parameter, "cannot concatenate through a closed circuit");
      out.vertices.insert(out.vertices.end(), p.vertices.begin(), p.vertices.end());
    }
    if (final_vertex) out.vertices.push_back(*final_vertex);
    if (out.vertices.size() > 1 && out.vertices.front() == out.vertices.back()) {
      out.vertices.pop_back();
      out.circuit = true;
    }
  }
  const auto& seq = out.vertices;
  size_t pairs = seq.size() - (out.circuit ? 0 : 1);
  for (size_t k = 0; k < pairs; ++k) {
    int a = seq[k], b = seq[(k + 1) % seq.size()];
    if (!g.has_edge(a, b))
      fail(errc::missing_junction_edge, "no edge " + g.display(a) + "-" + g.display(b));
  }
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    fail(errc::vertex_reuse, "vertex " + g.display(*dup) + " appears twice");
  return out;
}

TwoFactor two_factor_from_circuits(const Graph& g, std::span<const Path> circuits) {
  std::vector<int> cover(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> edge_ids;
  for (const Path& c : circuits) {
    if (!c.circuit) fail(errc::invalid_parameter, "2-factor members must be circuits");
    for (int v : c.vertices) ++cover[static_cast<size_t>(v)];
    for (size_t k = 0; k < c.vertices.size(); ++k) {
      int a = c.vertices[k], b = c.vertices[(k + 1) % c.vertices.size()];
      auto e = g.edge_id(a, b);
      if (!e) fail(errc::missing_junction_edge, "no edge " + g.display(a) + "-" + g.display(b));
      edge_ids.push_back(*e);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (cover[static_cast<size_t>(v)] > 1) fail(errc::vertex_reuse, "vertex " + g.display(v) + " appears twice");
    if (cover[static_cast<size_t>(v)] == 0)
      fail(errc::template_invalid, "circuits do not span, vertex " + g.display(v) + " missed");
  }
  std::sort(edge_ids.begin(), edge_ids.end());
  TwoFactor tf;
  tf.edges = std::move(edge_ids);
  tf.decomposition = decompose(g, tf.edges);
  tf.circuit_count = static_cast<int>(tf.decomposition.circuits.size());
  tf.parity = tf.circuit_count % 2 == 1 ? Parity::odd : Parity::even;
  return tf;
}

namespace {

Path inst(const Graph& host, const char* name, int i, int m) {
  return instantiate(witness_template(name), host, i, m);
}

TwoFactor d_hamiltonian(const Graph& host, int n) {
  int r = n % 3, m = (n - r) / 3;
  std::vector<Path> parts;
  for (int i = 1; i <= m; ++i) parts.push_back(inst(host, "L1", i, m));
  if (r == 1) parts.push_back(inst(host, "W2", 0, m));
  if (r == 2) parts.push_back(inst(host, "W4", 0, m));
  Path circuit = concat(host, parts, host.vertex_by_label("u_1^1"));
  return two_factor_from_circuits(host, std::array{circuit});
}

TwoFactor d_disconnected(const Graph& host, int n) {
  int r = n % 3, m = (n - r) / 3;
  Path small, large;
  if (r == 1 && m == 3) {
    small = concat(host, std::array{inst(host, "C2", 0, m)});
    large = concat(host, std::array{inst(host, "C3", 0, m)});
  } else {
    small = concat(host, std::array{inst(host, "C1", 0, m)});
    std::vector<Path> parts;
    if (r == 0) {
      parts.push_back(inst(host, "M1", 0, m));
      for (int i = 4; i <= m; ++i) parts.push_back(inst(host, "L2", i, m));
      large = concat(host, parts, parts[0].vertices[0]);
    } else if (r == 1) {
      parts.push_back(inst(host, "M1", 0, m));
      for (int i = 4; i <= m - 1; ++i) parts.push_back(inst(host, "L2", i, m));
      parts.push_back(inst(host, "M2", 0, m));
      large = concat(host, parts);  // M2 returns to the start of M1
    } else {
      for (int i = 3; i <= m; ++i) parts.push_back(inst(host, "NI", i, m));
      parts.push_back(inst(host, "NW", 0, m));
      large = concat(host, parts, parts[0].vertices[0]);
    }
  }
  return two_factor_from_circuits(host, std::array{small, large});
}

TwoFactor t_hamiltonian(const Graph& host, int n, int variant) {
  std::vector<Path> parts;
  const char* close_at;
  if (variant == 3) {
    parts.push_back(inst(host, "Q1", 1, n));
    close_at = "u_1^3";
  } else {
    parts.push_back(inst(host, "P1", 1, n));
    close_at = "u_1^2";
  }
  for (int i = 2; i <= n; ++i) parts.push_back(inst(host, "P1", i, n));
  Path circuit = concat(host, parts, host.vertex_by_label(close_at));
  return two_factor_from_circuits(host, std::array{circuit});
}

TwoFactor t_disconnected(const Graph& host, int n, int variant) {
  std::vector<Path> parts;
  const char* close_at;
  if (variant == 3) {
    parts.push_back(inst(host, "Q2", 1, n));
    close_at = "u_1^3";
  } else {
    parts.push_back(inst(host, "P2", 1, n));
    close_at = "u_1^2";
  }
  for (int i = 2; i <= n; ++i) parts.push_back(inst(host, "P1", i, n));
  Path large = concat(host, parts, host.vertex_by_label(close_at));
  Path small = concat(host, std::array{inst(host, "P3", 1, n)});
  return two_factor_from_circuits(host, std::array{small, large});
}

// First 2-factor with exactly one circuit plus first with exactly two,
// found by enumeration; used when the closed-form templates do not embed.
std::pair<TwoFactor, TwoFactor> enumerate_pair(const Graph& host, const std::string& why) {
  std::optional<TwoFactor> one, two;
  enumerate_perfect_matchings(host, [&](const PerfectMatching& pm) {
    TwoFactor tf = two_factor_of(host, pm);
    if (tf.circuit_count == 1 && !one) one = std::move(tf);
    else if (tf.circuit_count == 2 && !two) two = std::move(tf);
    return !(one && two);
  });
  if (!one || !two)
    fail(errc::template_invalid,
         why + "; enumeration found no (1 circuit, 2 circuits) pair either");
  return {std::move(*one), std::move(*two)};
}

}  // namespace

WitnessPair d_witness_pair_on(Graph host, int n) {
  if (n < 8) fail(errc::out_of_range, "d witness pairs start at n = 8");
  WitnessPair wp;
  wp.family = "d";
  wp.n = n;
  try {
    wp.hamiltonian = d_hamiltonian(host, n);
    wp.disconnected = d_disconnected(host, n);
  } catch (const Error& e) {
    wp.from_template = false;
    wp.template_error = e.what();
    auto [one, two] = enumerate_pair(host, e.what());
    wp.hamiltonian = std::move(one);
    wp.disconnected = std::move(two);
  }
  wp.host = std::move(host);
  return wp;
}

WitnessPair d_witness_pair(int n) {
  if (n < 8) fail(errc::out_of_range, "d witness pairs start at n = 8");
  return d_witness_pair_on(d_graph(n), n);
}

WitnessPair t_witness_pair_on(Graph host, int n, int variant) {
  if (n < 1) fail(errc::out_of_range, "t witness pairs need n >= 1");
  if (variant < 1 || variant > 3) fail(errc::invalid_parameter, "variant must be 1, 2 or 3");
  WitnessPair wp;
  wp.family = "t";
  wp.n = n;
  wp.variant = variant;
  try {
    wp.hamiltonian = t_hamiltonian(host, n, variant);
    wp.disconnected = t_disconnected(host, n, variant);
  } catch (const Error& e) {
    wp.from_template = false;
    wp.template_error = e.what();
    auto [one, two] = enumerate_pair(host, e.what());
    wp.hamiltonian = std::move(one);
    wp.disconnected = std::move(two);
  }
  wp.host = std::move(host);
  return wp;
}

WitnessPair t_witness_pair(int n, int variant) {
  return t_witness_pair_on(t_graph(n, variant), n, variant);
}

}  // namespace levi
