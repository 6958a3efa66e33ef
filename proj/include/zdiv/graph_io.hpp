#pragma once

// Text formats for graphs.
//
// edge-list: one `u v` pair per line, a lone `u` declares a vertex, `#` starts a
//            comment. Vertex order is order of first appearance.
// graph6:    the standard dense format (n < 258048); decoded vertices are "0".."n-1".
// DOT:       emit only; `graph { }`, or `digraph { }` when arcs are supplied.

#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "zdiv/graph.hpp"

namespace zdiv {

std::string to_edge_list(const Graph& g);
/// Throws ParseError with the offset of the offending line.
Graph parse_edge_list(std::string_view text);

std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph parse_graph6(std::string_view text);

std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, std::span<const std::pair<Vertex, Vertex>> arcs);

/// Reads a graph file; ".g6" selects graph6, anything else is an edge list.
/// Throws Error if the file cannot be read.
Graph read_graph_file(const std::string& path);

}  // namespace zdiv
