#include "orientlat/graph_catalog.hpp"

#include <cstdint>

#include "orientlat/errors.hpp"

namespace orientlat {

namespace {

bool connected_mask(int vertices, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                    std::uint64_t mask) {
  std::vector<int> parent(vertices);
  for (int v = 0; v < vertices; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int parts = vertices;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (!(mask >> e & 1U)) continue;
    int a = find(pairs[e].first), b = find(pairs[e].second);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace

Graph path_graph(int vertices) {
  if (vertices < 1) throw GraphError("path needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < vertices; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(vertices - 1, edges);
}

Graph cycle_graph(int vertices) {
  if (vertices < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < vertices; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, vertices - 1);
  return Graph::from_edges(vertices - 1, edges);
}

Graph complete_graph(int vertices) {
  if (vertices < 1) throw GraphError("complete graph needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b) edges.emplace_back(a, b);
  return Graph::from_edges(vertices - 1, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw GraphError("star needs at least one leaf");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves, edges);
}

Graph complete_bipartite(int left, int right) {
  if (left < 1 || right < 1) throw GraphError("bipartite parts must be nonempty");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < left; ++a)
    for (int b = left; b < left + right; ++b) edges.emplace_back(a, b);
  return Graph::from_edges(left + right - 1, edges);
}

std::vector<Graph> connected_graphs(int vertices) {
  if (vertices < 1) return {};
  if (vertices == 1) return {Graph::from_edges(0, {})};
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b) pairs.emplace_back(a, b);
  if (pairs.size() > 40) throw GraphError("too many vertices for exhaustive generation");

  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (!connected_mask(vertices, pairs, mask)) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1U) edges.push_back(pairs[e]);
    out.push_back(Graph::from_edges(vertices - 1, std::move(edges)));
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_vertices) {
  std::vector<Graph> out;
  for (int v = 1; v <= max_vertices; ++v) {
    auto level = connected_graphs(v);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string graph_label(const Graph& g) {
  std::string label = "v" + std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) label += ',';
    first = false;
    label += std::to_string(e.lo);
    if (g.n() >= 10) label += '-';
    label += std::to_string(e.hi);
  }
  return label;
}

}  // namespace orientlat
