#include "levi/configuration.hpp"

#include <algorithm>
#include <map>

#include "levi/errors.hpp"

namespace levi {

void Configuration::validate() const {
  if (points <= 0) fail(errc::invalid_parameter, "configuration needs a positive point count");
  if (static_cast<int>(lines.size()) != points)
    fail(errc::invalid_parameter, "symmetric configuration needs as many lines as points");
  std::vector<int> deg(static_cast<size_t>(points), 0);
  std::map<std::pair<int, int>, int> pair_line;
  for (int j = 0; j < static_cast<int>(lines.size()); ++j) {
    const auto& ln = lines[static_cast<size_t>(j)];
    if (!(ln[0] < ln[1] && ln[1] < ln[2]))
      fail(errc::invalid_parameter, "line " + std::to_string(j) + " is not three ascending points");
    if (ln[0] < 0 || ln[2] >= points)
      fail(errc::invalid_parameter, "line " + std::to_string(j) + " has a point out of range");
    for (int p : ln) ++deg[static_cast<size_t>(p)];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        auto [it, fresh] = pair_line.emplace(std::make_pair(ln[a], ln[b]), j);
        if (!fresh)
          fail(errc::not_linear, "points " + std::to_string(ln[a]) + "," + std::to_string(ln[b]) +
                                     " lie on lines " + std::to_string(it->second) + " and " +
                                     std::to_string(j));
      }
  }
  for (int p = 0; p < points; ++p)
    if (deg[static_cast<size_t>(p)] != 3)
      fail(errc::invalid_parameter, "point " + std::to_string(p) + " lies on " +
                                        std::to_string(deg[static_cast<size_t>(p)]) + " lines, want 3");
}

Graph levi(const Configuration& c) {
  c.validate();
  const int n = c.points;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  for (int j = 0; j < n; ++j) labels.push_back("l" + std::to_string(j));
  for (int j = 0; j < n; ++j)
    for (int p : c.lines[static_cast<size_t>(j)]) edges.push_back({p, n + j});
  return Graph(2 * n, std::move(edges), std::move(labels));
}

Configuration config_from_levi(const Graph& g, Side point_side) {
  if (!is_cubic(g)) fail(errc::not_cubic, "a Levi graph is cubic");
  Bipartition bp = bipartition(g);
  if (!bp.ok()) fail(errc::not_bipartite, "a Levi graph is bipartite");
  auto gr = girth(g);
  if (gr && *gr < 6)
    fail(errc::girth_too_small, "girth " + std::to_string(*gr) +
                                    " < 6, two lines would share two points");
  std::vector<int> point_id(static_cast<size_t>(g.vertex_count()), -1);
  int np = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (bp.side[static_cast<size_t>(v)] == point_side) point_id[static_cast<size_t>(v)] = np++;
  Configuration c;
  c.points = np;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (bp.side[static_cast<size_t>(v)] == point_side) continue;
    std::array<int, 3> ln{};
    int k = 0;
    for (int w : g.neighbors(v)) ln[static_cast<size_t>(k++)] = point_id[static_cast<size_t>(w)];
    std::sort(ln.begin(), ln.end());
    c.lines.push_back(ln);
  }
  c.validate();
  return c;
}

}  // namespace levi
