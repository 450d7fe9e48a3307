#pragma once

#include <string>
#include <string_view>

#include "levi/graph.hpp"

namespace levi {

// Header-less graph6, bit-exact per the standard encoding. Labels are not
// representable and are dropped on a round trip.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);  // ParseError carries the byte offset

// Plain edge list: "n m" then one "u v" per edge, 0-based.
std::string to_edgelist(const Graph& g);
Graph from_edgelist(std::string_view text);

// Incremental variant: consumes exactly one edge list starting at pos and
// advances it, so several graphs can sit on one stream.
Graph read_edgelist(std::string_view text, size_t& pos);

}  // namespace levi
