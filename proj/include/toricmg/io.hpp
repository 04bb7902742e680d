#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toricmg/graph.hpp"

namespace toricmg {

/// Lines "u v"; blank lines and '#' comments are skipped. Vertices are
/// 0..max seen unless a "# vertices N" line asks for more. Edges keep file
/// order. Throws ParseError, DuplicateEdge, LoopEdge.
Graph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list; writes a "# vertices N" line first.
std::string serialize_edge_list(const Graph& g);

/// One graph6 line (trailing newline allowed), n <= 62. Edges are indexed in
/// row-major order of the upper triangle: (0,1), (0,2), ..., (1,2), ...
/// Throws MalformedGraph6.
Graph parse_graph6_line(std::string_view line);
/// graph6 encoding of g; edge order is irrelevant. Throws MalformedGraph6 when n > 62.
std::string to_graph6(const Graph& g);

/// Same graph with edges renumbered in row-major upper-triangle order.
Graph sorted_edges(const Graph& g);

/// Every connected bipartite graph on exactly n vertices, one per
/// isomorphism class, sides {0..a-1} and {a..n-1}, edges in row-major order.
/// Supports n <= 10.
std::vector<Graph> connected_bipartite_graphs(int n);

}  // namespace toricmg
