#pragma once

#include <string>

#include "deckforge/graph.hpp"

namespace deckforge {

// graph6 text form for graphs on up to 62 vertices: one byte n+63, then the
// upper-triangle bits in column-major order (x01, x02, x12, x03, ...) packed
// big-endian into 6-bit groups, each offset by 63.  Larger orders and
// malformed strings are rejected.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

}  // namespace deckforge
