#ifndef RAINBOW_IO_HPP
#define RAINBOW_IO_HPP

#include <iosfwd>
#include <string>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Native edge-list format: "p <n> <m>" header, then m lines "e <u> <v>", 0-based.
/// Lines starting with '#' are comments. With dimacs=true the header is
/// "p edge <n> <m>", endpoints are 1-based and 'c' lines are comments.
Graph read_edge_list(std::istream& in, bool dimacs = false);
Graph read_edge_list_file(const std::string& path, bool dimacs = false);
void write_edge_list(std::ostream& out, const Graph& g);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// Coloring JSON: {"palette": k, "edges": [{"u":..,"v":..,"color":..,"rule":..}, ...]}
/// plus "shortcut_edges" when present. Parsing matches edges against g by endpoints.
std::string coloring_to_json(const Graph& g, const RainbowColoring& c);
RainbowColoring coloring_from_json(const Graph& g, const std::string& text);

}  // namespace rainbow

#endif
