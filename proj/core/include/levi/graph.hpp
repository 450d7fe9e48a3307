#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace levi {

// Undirected simple graph on vertices 0..n-1. Edges are stored normalized
// (u < v) and sorted ascending; the position in edges() is the edge id used
// everywhere else (matchings, 2-factors, cuts, sites). Immutable after
// construction, so it can be shared freely.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side : std::uint8_t { black, white };

struct Bipartition {
  std::vector<Side> side;      // per vertex; meaningful only when ok()
  std::vector<int> odd_cycle;  // closed odd walk witnessing failure, empty when bipartite
  bool ok() const { return odd_cycle.empty(); }
};

struct EdgeCut {
  std::vector<int> edges;  // edge ids, ascending
  int smaller_side = 0;    // vertex count of the smallest component after removal
};

// Open path or circuit given by its vertex sequence. For a circuit the edge
// back from vertices.back() to vertices.front() is implied, not repeated.
struct Path {
  std::vector<int> vertices;
  bool circuit = false;
  int length() const {
    return static_cast<int>(vertices.size()) - (circuit ? 0 : 1);
  }
};

struct CircuitDecomposition {
  // Each circuit is written in its lexicographically least rotation and
  // direction; circuits are ordered by their first (= least) vertex.
  std::vector<std::vector<int>> circuits;
  std::vector<int> lengths;  // ascending multiset of circuit lengths
};

class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  const std::vector<int>& incident_edges(int v) const { return inc_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  std::optional<int> edge_id(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }
  // For e = {u,v} returns the endpoint that is not w.
  int other_end(int e, int w) const;

  bool labeled() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
  std::optional<int> vertex_by_label(std::string_view lab) const;
  // label when present, else the decimal index
  std::string display(int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // ascending neighbor ids
  std::vector<std::vector<int>> inc_;  // ascending incident edge ids
  std::vector<std::string> labels_;
};

bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// Deterministic 2-coloring: the least vertex of every component is black.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Exact edge connectivity via unit-capacity max-flow. Pre: connected, n >= 2.
int edge_connectivity(const Graph& g);

// A graph is essentially 4-edge-connected when it is 3-edge-connected and
// every 3-edge-cut isolates a single vertex. Returns nullopt in that case,
// otherwise the first obstruction cut in deterministic order (smallest cut
// size first, then ascending edge-id triples). Pre: cubic, connected.
std::optional<EdgeCut> essential_4ec_obstruction(const Graph& g);

// Splits a spanning 2-regular edge subset into circuits. Every vertex must
// have degree 0 or 2 in the subset; vertices of other degrees are reported
// via NotTwoRegular.
CircuitDecomposition decompose(const Graph& g, std::span<const int> edge_ids);

}  // namespace levi
