#include "levi/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "levi/errors.hpp"

namespace levi {

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n, std::move(edges), {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0) fail(errc::invalid_graph, "negative vertex count");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      fail(errc::invalid_graph, "edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v));
    if (e.u == e.v) fail(errc::invalid_graph, "loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    fail(errc::invalid_graph, "duplicate edge");
  adj_.assign(static_cast<size_t>(n_), {});
  inc_.assign(static_cast<size_t>(n_), {});
  for (int e = 0; e < edge_count(); ++e) {
    adj_[static_cast<size_t>(edges_[static_cast<size_t>(e)].u)].push_back(edges_[static_cast<size_t>(e)].v);
    adj_[static_cast<size_t>(edges_[static_cast<size_t>(e)].v)].push_back(edges_[static_cast<size_t>(e)].u);
    inc_[static_cast<size_t>(edges_[static_cast<size_t>(e)].u)].push_back(e);
    inc_[static_cast<size_t>(edges_[static_cast<size_t>(e)].v)].push_back(e);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n_)
      fail(errc::invalid_graph, "label count does not match vertex count");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n_) fail(errc::invalid_graph, "duplicate vertex label");
  }
}

std::optional<int> Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it != edges_.end() && it->u == u && it->v == v)
    return static_cast<int>(it - edges_.begin());
  return std::nullopt;
}

int Graph::other_end(int e, int w) const {
  const Edge& ed = edges_[static_cast<size_t>(e)];
  return ed.u == w ? ed.v : ed.u;
}

std::optional<int> Graph::vertex_by_label(std::string_view lab) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[static_cast<size_t>(v)] == lab) return v;
  return std::nullopt;
}

std::string Graph::display(int v) const {
  return labeled() ? labels_[static_cast<size_t>(v)] : std::to_string(v);
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<size_t>(s)] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

Bipartition bipartition(const Graph& g) {
  const int n = g.vertex_count();
  Bipartition bp;
  bp.side.assign(static_cast<size_t>(n), Side::black);
  std::vector<int> depth(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (depth[static_cast<size_t>(s)] >= 0) continue;
    depth[static_cast<size_t>(s)] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.neighbors(u)) {
        if (depth[static_cast<size_t>(w)] < 0) {
          depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(u)] + 1;
          parent[static_cast<size_t>(w)] = u;
          bp.side[static_cast<size_t>(w)] =
              bp.side[static_cast<size_t>(u)] == Side::black ? Side::white : Side::black;
          q.push_back(w);
        } else if (bp.side[static_cast<size_t>(w)] == bp.side[static_cast<size_t>(u)]) {
          // odd closed walk: u up to the common ancestor, then down to w
          std::vector<int> up_u{u}, up_w{w};
          int a = u, b = w;
          while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) up_u.push_back(a = parent[static_cast<size_t>(a)]);
          while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) up_w.push_back(b = parent[static_cast<size_t>(b)]);
          while (a != b) {
            up_u.push_back(a = parent[static_cast<size_t>(a)]);
            up_w.push_back(b = parent[static_cast<size_t>(b)]);
          }
          bp.odd_cycle.assign(up_u.begin(), up_u.end());
          bp.odd_cycle.pop_back();  // common ancestor appears once
          bp.odd_cycle.insert(bp.odd_cycle.end(), up_w.rbegin(), up_w.rend());
          return bp;
        }
      }
    }
  }
  return bp;
}

bool is_bipartite(const Graph& g) { return bipartition(g).ok(); }

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(static_cast<size_t>(n)), parent(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[static_cast<size_t>(s)] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (best > 0 && 2 * dist[static_cast<size_t>(u)] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          parent[static_cast<size_t>(w)] = u;
          q.push_back(w);
        } else if (w != parent[static_cast<size_t>(u)]) {
          int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

// Unit-capacity max-flow between s and t on the undirected graph, classic
// shortest-augmenting-path; capacities live in a dense matrix.
int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
  const int n = static_cast<int>(cap.size());
  int flow = 0;
  for (;;) {
    std::vector<int> prev(static_cast<size_t>(n), -1);
    prev[static_cast<size_t>(s)] = s;
    std::deque<int> q{s};
    while (!q.empty() && prev[static_cast<size_t>(t)] < 0) {
      int u = q.front();
      q.pop_front();
      for (int w = 0; w < n; ++w)
        if (prev[static_cast<size_t>(w)] < 0 && cap[static_cast<size_t>(u)][static_cast<size_t>(w)] > 0) {
          prev[static_cast<size_t>(w)] = u;
          q.push_back(w);
        }
    }
    if (prev[static_cast<size_t>(t)] < 0) return flow;
    for (int w = t; w != s; w = prev[static_cast<size_t>(w)]) {
      int u = prev[static_cast<size_t>(w)];
      --cap[static_cast<size_t>(u)][static_cast<size_t>(w)];
      ++cap[static_cast<size_t>(w)][static_cast<size_t>(u)];
    }
    ++flow;
  }
}

std::vector<int> component_sizes_without(const Graph& g, std::span<const int> removed) {
  const int n = g.vertex_count();
  std::vector<char> cut(static_cast<size_t>(g.edge_count()), 0);
  for (int e : removed) cut[static_cast<size_t>(e)] = 1;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> sizes;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int count = 0;
    stack.assign(1, s);
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++count;
      for (int e : g.incident_edges(u)) {
        if (cut[static_cast<size_t>(e)]) continue;
        int w = g.other_end(e, u);
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

std::optional<EdgeCut> cut_from(const Graph& g, std::vector<int> edges, bool need_nontrivial) {
  auto sizes = component_sizes_without(g, edges);
  if (sizes.size() < 2) return std::nullopt;
  int smallest = *std::min_element(sizes.begin(), sizes.end());
  if (need_nontrivial && smallest < 2) return std::nullopt;
  return EdgeCut{std::move(edges), smallest};
}

}  // namespace

int edge_connectivity(const Graph& g) {
  if (g.vertex_count() < 2) fail(errc::invalid_parameter, "edge connectivity needs >= 2 vertices");
  if (!is_connected(g)) fail(errc::disconnected_input, "edge connectivity of a disconnected graph");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cap(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    cap[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] = 1;
    cap[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] = 1;
  }
  int lambda = g.edge_count();
  for (int t = 1; t < n; ++t) lambda = std::min(lambda, max_flow(cap, 0, t));
  return lambda;
}

std::optional<EdgeCut> essential_4ec_obstruction(const Graph& g) {
  if (!is_cubic(g)) fail(errc::not_cubic, "essential 4-edge-connectivity is defined for cubic graphs");
  if (!is_connected(g)) fail(errc::disconnected_input, "essential 4-edge-connectivity of a disconnected graph");
  const int m = g.edge_count();
  int lambda = edge_connectivity(g);
  if (lambda <= 2) {
    // in a cubic graph a cut of size <= 2 cannot isolate a vertex, so the
    // first disconnecting set of that size is already an obstruction
    if (lambda == 1) {
      for (int a = 0; a < m; ++a)
        if (auto cut = cut_from(g, {a}, false)) return cut;
    }
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (auto cut = cut_from(g, {a, b}, false)) return cut;
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        if (auto cut = cut_from(g, {a, b, c}, true)) return cut;
  return std::nullopt;
}

CircuitDecomposition decompose(const Graph& g, std::span<const int> edge_ids) {
  const int n = g.vertex_count();
  std::vector<std::array<int, 2>> slot(static_cast<size_t>(n), {-1, -1});
  std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) fail(errc::invalid_parameter, "edge id out of range");
    if (used[static_cast<size_t>(e)]) fail(errc::invalid_parameter, "repeated edge id");
    used[static_cast<size_t>(e)] = 1;
    for (int w : {g.edge(e).u, g.edge(e).v}) {
      auto& s = slot[static_cast<size_t>(w)];
      if (s[0] < 0) s[0] = g.other_end(e, w);
      else if (s[1] < 0) s[1] = g.other_end(e, w);
      else fail(errc::not_two_regular, "vertex " + g.display(w) + " has degree > 2 in the subset");
    }
  }
  for (int v = 0; v < n; ++v) {
    auto& s = slot[static_cast<size_t>(v)];
    if (s[0] >= 0 && s[1] < 0)
      fail(errc::not_two_regular, "vertex " + g.display(v) + " has degree 1 in the subset");
    if (s[0] > s[1]) std::swap(s[0], s[1]);
  }
  CircuitDecomposition out;
  std::vector<char> done(static_cast<size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (done[static_cast<size_t>(s)] || slot[static_cast<size_t>(s)][0] < 0) continue;
    // s is the least vertex of its circuit; stepping to the smaller neighbor
    // first yields the lexicographically least rotation and direction
    std::vector<int> circ{s};
    done[static_cast<size_t>(s)] = 1;
    int prev = s, cur = slot[static_cast<size_t>(s)][0];
    while (cur != s) {
      circ.push_back(cur);
      done[static_cast<size_t>(cur)] = 1;
      auto& sc = slot[static_cast<size_t>(cur)];
      int next = sc[0] == prev ? sc[1] : sc[0];
      prev = cur;
      cur = next;
    }
    out.lengths.push_back(static_cast<int>(circ.size()));
    out.circuits.push_back(std::move(circ));
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

}  // namespace levi
