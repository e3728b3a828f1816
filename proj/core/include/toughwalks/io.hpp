#pragma once

#include <string>
#include <string_view>

#include "toughwalks/graph.hpp"

namespace toughwalks {

/// "n m" header line, then m lines "u v". Blank lines are ignored.
/// Throws ParseError (codes ParseError, DuplicateEdge, SelfLoop,
/// VertexOutOfRange) carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Standard graph6 (optional ">>graph6<<" header, one graph, trailing
/// newline allowed). Throws ParseError.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace toughwalks
