#pragma once

#include <string>
#include <vector>

#include "orientlat/graph.hpp"

namespace orientlat {

// Standard families, labelled so that vertex 0 is the root.
Graph path_graph(int vertices);      // 0-1-...-(vertices-1)
Graph cycle_graph(int vertices);     // path plus edge 0-(vertices-1)
Graph complete_graph(int vertices);
Graph star_graph(int leaves);        // centre 0
Graph complete_bipartite(int left, int right);  // parts {0..left-1}, {left..}

/// Every connected labelled graph on exactly `vertices` vertices, ordered by
/// the bitmask of present edges over the lexicographic list of vertex pairs.
std::vector<Graph> connected_graphs(int vertices);

/// connected_graphs(1) ++ connected_graphs(2) ++ ... ++ connected_graphs(max).
std::vector<Graph> connected_graphs_up_to(int max_vertices);

/// Short stable label such as "v4:01,12,23" used in reports.
std::string graph_label(const Graph& g);

}  // namespace orientlat
