#pragma once

#include <array>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

// Symmetric n3 configuration: n points and n lines, three points on every
// line, three lines through every point, two lines sharing at most one
// point (linearity).
struct Configuration {
  int points = 0;
  std::vector<std::array<int, 3>> lines;  // point ids, ascending within each line

  void validate() const;  // throws InvalidParameter / NotLinear
};

// Bipartite incidence graph of the configuration: points become vertices
// 0..n-1 ("p<i>"), lines n..2n-1 ("l<j>"). The result is cubic with girth
// at least 6; a 4-cycle would be two lines sharing two points.
Graph levi(const Configuration& c);

// Reads a configuration back off a Levi graph, taking the chosen side as
// points in vertex order. Pre: cubic, bipartite, girth >= 6.
Configuration config_from_levi(const Graph& g, Side point_side = Side::black);

}  // namespace levi
