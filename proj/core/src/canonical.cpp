#include "levi/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "levi/errors.hpp"

namespace levi {

namespace {

// Equitable refinement of a colouring. Colours are dense ranks; vertices are
// re-ranked by (own colour, sorted neighbour colour multiset) until stable.
// The rank order is isomorphism-invariant, which is all the search needs.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  if (n == 0) return;
  std::vector<std::vector<int>> sig(static_cast<size_t>(n));
  std::vector<int> order(static_cast<size_t>(n));
  for (;;) {
    int old_k = 1 + *std::max_element(color.begin(), color.end());
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.clear();
      s.push_back(color[static_cast<size_t>(v)]);
      for (int w : g.neighbors(v)) s.push_back(color[static_cast<size_t>(w)]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[static_cast<size_t>(a)] < sig[static_cast<size_t>(b)];
    });
    std::vector<int> next(static_cast<size_t>(n));
    int k = 0;
    next[static_cast<size_t>(order[0])] = 0;
    for (int i = 1; i < n; ++i) {
      if (sig[static_cast<size_t>(order[static_cast<size_t>(i)])] !=
          sig[static_cast<size_t>(order[static_cast<size_t>(i - 1)])])
        ++k;
      next[static_cast<size_t>(order[static_cast<size_t>(i)])] = k;
    }
    color.swap(next);
    if (k + 1 == old_k) return;
  }
}

std::string leaf_certificate(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  std::string cert;
  cert.reserve(8 + static_cast<size_t>(n) * static_cast<size_t>(n) / 16 + 1);
  auto push_u32 = [&cert](std::uint32_t x) {
    for (int s = 24; s >= 0; s -= 8) cert.push_back(static_cast<char>((x >> s) & 0xff));
  };
  push_u32(static_cast<std::uint32_t>(n));
  push_u32(static_cast<std::uint32_t>(g.edge_count()));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ? 1 : 0);
      if (++bits == 8) {
        cert.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) cert.push_back(static_cast<char>(acc << (8 - bits)));
  return cert;
}

struct Search {
  const Graph& g;
  std::string best;
  std::vector<int> best_perm;
  bool have = false;

  void run(std::vector<int> color) {
    refine(g, color);
    const int n = g.vertex_count();
    // first colour class with more than one vertex
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int c : color) ++count[static_cast<size_t>(c)];
    int branch_color = -1;
    for (int c = 0; c < n; ++c)
      if (count[static_cast<size_t>(c)] > 1) {
        branch_color = c;
        break;
      }
    if (branch_color < 0) {
      std::vector<int> perm(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) perm[static_cast<size_t>(color[static_cast<size_t>(v)])] = v;
      std::string cert = leaf_certificate(g, perm);
      if (!have || cert < best) {
        best = std::move(cert);
        best_perm = std::move(perm);
        have = true;
      }
      return;
    }
    int fresh = 1 + *std::max_element(color.begin(), color.end());
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<size_t>(v)] != branch_color) continue;
      std::vector<int> child = color;
      child[static_cast<size_t>(v)] = fresh;
      run(std::move(child));
    }
  }
};

struct CanonResult {
  std::string cert;
  std::vector<int> perm;
};

CanonResult canonical_search(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {leaf_certificate(g, {}), {}};
  Search s{g, {}, {}, false};
  s.run(std::vector<int>(static_cast<size_t>(n), 0));
  return {std::move(s.best), std::move(s.best_perm)};
}

}  // namespace

std::string canonical_form(const Graph& g) { return canonical_search(g).cert; }

std::vector<int> canonical_labeling(const Graph& g) { return canonical_search(g).perm; }

std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  auto degs = [](const Graph& g) {
    std::vector<int> d(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return std::nullopt;
  CanonResult ra = canonical_search(a), rb = canonical_search(b);
  if (ra.cert != rb.cert) return std::nullopt;
  std::vector<int> f(static_cast<size_t>(a.vertex_count()));
  for (int k = 0; k < a.vertex_count(); ++k)
    f[static_cast<size_t>(ra.perm[static_cast<size_t>(k)])] = rb.perm[static_cast<size_t>(k)];
  return f;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return isomorphism(a, b).has_value(); }

}  // namespace levi
