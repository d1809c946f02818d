#pragma once

#include "theta/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace theta {

/// graph6 text (no ">>graph6<<" header, no trailing newline).
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Throws ParseError on malformed input.
Graph decode_graph6(std::string_view text);

/// Edge-list text: "n m" followed by m lines "u v", 0-based.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

/// Reads a graph file; ".g6" / ".graph6" are graph6, anything else edge-list.
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace theta
