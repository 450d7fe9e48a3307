#pragma once

#include <array>

#include "levi/configuration.hpp"
#include "levi/graph.hpp"

namespace levi {

// Cyclic configuration with base line {0, b, c}: line j is {j, j+b, j+c}
// mod n. Not every parameter choice is linear; cyclic_configuration throws
// NotLinear when two translates of the base line meet twice.
struct CyclicParams {
  int n = 0;
  int b = 1;
  int c = 3;
};

Configuration cyclic_configuration(const CyclicParams& p);
Graph cyclic_levi(const CyclicParams& p);

Graph k33();      // Levi graph of the triangle, girth 4, the one non-linear case kept around
Graph heawood();  // cyclic {7,1,3}, Levi graph of the Fano plane
Graph pappus();   // Levi graph of the Pappus configuration

// Open chain of m hexagonal segments; ends are the degree-2 vertices
// u_1^1, u_1^2, u_1^4 and v_m^1, v_m^2, u_m^3.
Graph segment_chain(int m);

// Cubic bipartite girth-6 graph on 2n vertices, built by closing a segment
// chain; the closure depends on n mod 3 and may add one extra gadget of
// two or four w-vertices. Isomorphic to cyclic_levi({n,1,3}).
Graph d_graph(int n);  // n >= 7

// One 20-vertex block of the T families, open at u_1^{1..3} / v_1^{1..3}.
Graph t_segment();

// n blocks linked in a row, closed up in one of three ways; the variants
// are pairwise non-isomorphic for every n.
Graph t_graph(int n, int variant);  // n >= 1, variant in {1,2,3}

// Star product: delete x from a and y from b, then join the three dangling
// neighbor triples by the given pairing (neighbors taken in ascending
// order; join edge k is nbr_a(x)[k] - nbr_b(y)[pairing[k]]). The three join
// edges always form a non-trivial 3-edge-cut of the result.
Graph star_product(const Graph& a, int x, const Graph& b, int y,
                   const std::array<int, 3>& pairing);

}  // namespace levi
