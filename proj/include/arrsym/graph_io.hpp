#pragma once

#include <string>
#include <string_view>

#include "arrsym/graph.hpp"

namespace arrsym {

enum class GraphFormat { edgelist, dot, graphdoc };

GraphFormat parse_graph_format(std::string_view name);

// Edge list: "# vertices N" header, then one 0-based "u v" pair per line.
std::string to_edgelist(const Graph& g);
// DOT with tuple or permutation labels.
std::string to_dot(const Graph& g);
// JSON document carrying family metadata, 1-based labels and 0-based edges.
// from_graphdoc(to_graphdoc(g)) == g and the text round-trips byte for byte.
std::string to_graphdoc(const Graph& g);

std::string write_graph(const Graph& g, GraphFormat format);

Graph from_edgelist(std::string_view text);
Graph from_graphdoc(std::string_view text);
// Detects the graph document by its leading '{'; anything else is an edge list.
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace arrsym
