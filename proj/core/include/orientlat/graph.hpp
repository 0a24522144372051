#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace orientlat {

using Vertex = int;

/// Undirected edge stored canonically with lo < hi.
struct Edge {
  Vertex lo;
  Vertex hi;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple connected undirected graph on {0, ..., n} rooted at vertex 0.
///
/// Edges are kept in lexicographic (lo, hi) order and that order fixes the
/// edge index used by every orientation bit vector. Graph is an immutable
/// handle; copies share the same storage.
class Graph {
 public:
  /// Builds and validates a graph on {0, ..., n}. Throws GraphError for
  /// loops, duplicate edges, out-of-range vertices, isolated vertices or
  /// disconnection. n == 0 with no edges is the single-vertex graph.
  static Graph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  /// Vertex set is inferred as {0, ..., max label}.
  static Graph from_edges(std::vector<std::pair<Vertex, Vertex>> edges);

  /// Number of nonzero vertices.
  int n() const noexcept;
  int vertex_count() const noexcept { return n() + 1; }
  std::size_t edge_count() const noexcept;

  std::span<const Edge> edges() const noexcept;
  const Edge& edge(std::size_t index) const;

  /// Index of edge {a, b} in canonical order, if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  /// Sorted adjacency list. Throws GraphError when v is out of range.
  std::span<const Vertex> neighbors(Vertex v) const;

  /// Indices of the edges incident to v, ascending.
  std::span<const std::size_t> incident_edges(Vertex v) const;

  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v <= n(); }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data;
  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Parses whitespace-separated vertex pairs, one edge per line. '#' starts
/// a comment; blank lines are ignored.
Graph parse_edge_list(std::string_view text);

/// Reads and parses an edge-list file. Throws InputError on I/O failure.
Graph load_edge_list(const std::string& path);

/// Breadth-first distances d(0, v), indexed by vertex.
std::vector<int> distances_from_root(const Graph& g);

}  // namespace orientlat
