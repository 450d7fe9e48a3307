#include "levi/martinetti.hpp"

#include <algorithm>

#include "levi/canonical.hpp"
#include "levi/errors.hpp"

namespace levi {

namespace {

void require_levi(const Graph& g) {
  if (!is_cubic(g)) fail(errc::not_cubic, "Martinetti moves are defined on cubic graphs");
  if (!is_bipartite(g)) fail(errc::not_bipartite, "Martinetti moves are defined on bipartite graphs");
  auto gr = girth(g);
  if (gr && *gr < 6)
    fail(errc::girth_too_small, "Martinetti moves need girth >= 6, found " + std::to_string(*gr));
}

bool disjoint_neighborhoods(const Graph& g, int a, int b) {
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::vector<int> common;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
  return common.empty();
}

std::vector<std::string> extended_labels(const Graph& g, int n) {
  if (!g.labeled()) return {};
  std::vector<std::string> labels = g.labels();
  std::string lu = "*" + std::to_string(n), lv = "*" + std::to_string(n + 1);
  for (const auto& l : labels)
    if (l == lu || l == lv) return {};  // avoid a collision, drop labels instead
  labels.push_back(lu);
  labels.push_back(lv);
  return labels;
}

struct ReductionAttempt {
  const char* clause = nullptr;  // nullptr = valid
  Graph result;
};

ReductionAttempt try_reduction(const Graph& g, int u, int v, RewireOption option,
                               bool allow_disconnected) {
  std::array<int, 2> x{-1, -1}, y{-1, -1};
  int kx = 0, ky = 0;
  for (int w : g.neighbors(u))
    if (w != v) x[static_cast<size_t>(kx++)] = w;
  for (int w : g.neighbors(v))
    if (w != u) y[static_cast<size_t>(ky++)] = w;
  std::array<std::pair<int, int>, 2> add;
  if (option == RewireOption::straight)
    add = {{{x[0], y[0]}, {x[1], y[1]}}};
  else
    add = {{{x[0], y[1]}, {x[1], y[0]}}};
  for (auto& [a, b] : add)
    if (g.has_edge(a, b)) return {"multi-edge", {}};

  const int n = g.vertex_count();
  std::vector<int> map(static_cast<size_t>(n), -1);
  int next = 0;
  for (int w = 0; w < n; ++w)
    if (w != u && w != v) map[static_cast<size_t>(w)] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u == u || e.u == v || e.v == u || e.v == v) continue;
    edges.push_back({map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]});
  }
  for (auto& [a, b] : add) edges.push_back({map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]});
  std::vector<std::string> labels;
  if (g.labeled())
    for (int w = 0; w < n; ++w)
      if (w != u && w != v) labels.push_back(g.label(w));
  Graph out(n - 2, std::move(edges), std::move(labels));

  if (!is_cubic(out)) return {"regularity", {}};
  auto gr = girth(out);
  if (!is_bipartite(out) || (gr && *gr < 6)) return {"girth", {}};
  if (!allow_disconnected && !is_connected(out)) return {"disconnected", {}};
  return {nullptr, std::move(out)};
}

}  // namespace

std::vector<ExtensionSite> extension_sites(const Graph& g) {
  require_levi(g);
  Bipartition bp = bipartition(g);
  const int m = g.edge_count();
  std::vector<ExtensionSite> sites;
  for (int e1 = 0; e1 < m; ++e1) {
    for (int e2 = 0; e2 < m; ++e2) {
      if (e1 == e2) continue;
      ExtensionSite s;
      s.e1 = e1;
      s.e2 = e2;
      auto orient = [&bp](const Edge& e, int& x, int& y) {
        if (bp.side[static_cast<size_t>(e.u)] == Side::black) {
          x = e.u;
          y = e.v;
        } else {
          x = e.v;
          y = e.u;
        }
      };
      orient(g.edge(e1), s.x1, s.y1);
      orient(g.edge(e2), s.x2, s.y2);
      if (!disjoint_neighborhoods(g, s.x1, s.x2)) continue;
      if (!disjoint_neighborhoods(g, s.y1, s.y2)) continue;
      sites.push_back(s);
    }
  }
  return sites;
}

Graph extend(const Graph& g, const ExtensionSite& s) {
  require_levi(g);
  const int m = g.edge_count();
  if (s.e1 < 0 || s.e1 >= m || s.e2 < 0 || s.e2 >= m || s.e1 == s.e2)
    fail(errc::invalid_site, "extension site edge ids out of range");
  auto matches = [&](int e, int a, int b) {
    return (g.edge(e).u == a && g.edge(e).v == b) || (g.edge(e).u == b && g.edge(e).v == a);
  };
  if (!matches(s.e1, s.x1, s.y1) || !matches(s.e2, s.x2, s.y2))
    fail(errc::invalid_site, "site endpoints do not match the edges");
  Bipartition bp = bipartition(g);
  auto side = [&bp](int v) { return bp.side[static_cast<size_t>(v)]; };
  if (side(s.x1) != side(s.x2) || side(s.y1) != side(s.y2) || side(s.x1) == side(s.y1))
    fail(errc::invalid_site, "site endpoints are not consistently two-sided");
  if (!disjoint_neighborhoods(g, s.x1, s.x2))
    fail(errc::invalid_site, g.display(s.x1) + " and " + g.display(s.x2) + " share a neighbor");
  if (!disjoint_neighborhoods(g, s.y1, s.y2))
    fail(errc::invalid_site, g.display(s.y1) + " and " + g.display(s.y2) + " share a neighbor");

  const int n = g.vertex_count();
  const int u = n, v = n + 1;
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e)
    if (e != s.e1 && e != s.e2) edges.push_back(g.edge(e));
  edges.push_back({u, s.x1});
  edges.push_back({u, s.x2});
  edges.push_back({v, s.y1});
  edges.push_back({v, s.y2});
  edges.push_back({u, v});
  Graph out(n + 2, std::move(edges), extended_labels(g, n));

  auto gr = girth(out);
  if (!is_cubic(out) || !is_bipartite(out) || (gr && *gr < 6))
    fail(errc::invalid_site, "extension produced a non-Levi graph");
  return out;
}

std::vector<ReductionSite> reduction_sites(const Graph& g, bool allow_disconnected) {
  require_levi(g);
  std::vector<ReductionSite> sites;
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    for (RewireOption opt : {RewireOption::straight, RewireOption::crossed}) {
      ReductionAttempt a = try_reduction(g, u, v, opt, allow_disconnected);
      if (a.clause != nullptr) continue;
      ReductionSite s;
      s.edge = e;
      s.u = u;
      s.v = v;
      int kx = 0, ky = 0;
      for (int w : g.neighbors(u))
        if (w != v) s.x[static_cast<size_t>(kx++)] = w;
      for (int w : g.neighbors(v))
        if (w != u) s.y[static_cast<size_t>(ky++)] = w;
      s.option = opt;
      s.after_certificate = canonical_form(a.result);
      sites.push_back(std::move(s));
    }
  }
  return sites;
}

Graph reduce(const Graph& g, const ReductionSite& s, bool allow_disconnected) {
  require_levi(g);
  if (s.edge < 0 || s.edge >= g.edge_count()) fail(errc::invalid_site, "reduction edge id out of range");
  if (g.edge(s.edge).u != s.u || g.edge(s.edge).v != s.v)
    fail(errc::invalid_site, "reduction site endpoints do not match the edge");
  ReductionAttempt a = try_reduction(g, s.u, s.v, s.option, allow_disconnected);
  if (a.clause != nullptr)
    fail(errc::invalid_reduction, std::string(a.clause) + " at edge " + g.display(s.u) + "-" +
                                      g.display(s.v) +
                                      (s.option == RewireOption::straight ? " (straight)" : " (crossed)"));
  return std::move(a.result);
}

bool is_irreducible(const Graph& g) { return reduction_sites(g).empty(); }

std::vector<ExtensionClass> extensions_up_to_iso(const Graph& g) {
  std::vector<ExtensionClass> classes;
  for (const ExtensionSite& s : extension_sites(g)) {
    std::string cert = canonical_form(extend(g, s));
    bool found = false;
    for (auto& c : classes)
      if (c.certificate == cert) {
        ++c.multiplicity;
        found = true;
        break;
      }
    if (!found) classes.push_back({std::move(cert), s, 1});
  }
  return classes;
}

}  // namespace levi
