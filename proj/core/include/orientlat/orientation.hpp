#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orientlat/graph.hpp"

namespace orientlat {

/// An acyclic orientation of a Graph.
///
/// Directions are one bit per edge in the graph's canonical edge order:
/// bit e is set iff edge e points from its smaller endpoint to its larger
/// one. Construction rejects directed cycles, so every Orientation value
/// is an element of the preorder of acyclic orientations.
class Orientation {
 public:
  Orientation(Graph graph, std::vector<bool> lo_to_hi);

  /// Builds from explicit (tail, head) arcs, one per edge in any order.
  static Orientation from_arcs(Graph graph, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  /// Inverse of encoding(); requires edge_count() <= 64.
  static Orientation from_encoding(Graph graph, std::uint64_t code);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<bool>& directions() const noexcept { return lo_to_hi_; }

  Vertex head(std::size_t edge) const;
  Vertex tail(std::size_t edge) const;

  /// (tail, head) per edge in edge-index order.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  bool is_source(Vertex v) const;
  bool is_sink(Vertex v) const;

  /// Sum of bit_e * 2^e. Throws OrientationError above 64 edges.
  std::uint64_t encoding() const;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.lo_to_hi_ == b.lo_to_hi_ && a.graph_ == b.graph_;
  }

 private:
  struct Trusted {};
  Orientation(Trusted, Graph graph, std::vector<bool> lo_to_hi)
      : graph_(std::move(graph)), lo_to_hi_(std::move(lo_to_hi)) {}

  friend Orientation fire(const Orientation&, Vertex);
  friend Orientation unfire(const Orientation&, Vertex);
  friend std::vector<Orientation> enumerate_acyclic(const Graph&);
  friend std::vector<Orientation> enumerate_sink_zero(const Graph&);

  Graph graph_;
  std::vector<bool> lo_to_hi_;
};

struct VertexRoles {
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
};

VertexRoles vertex_roles(const Orientation& o);

/// Reverses every edge at source i, turning it into a sink.
Orientation fire(const Orientation& o, Vertex i);

/// Inverse of fire: reverses every edge at sink i.
Orientation unfire(const Orientation& o, Vertex i);

/// Kahn topological sort over the digraph given by raw direction bits.
bool is_acyclic(const Graph& g, const std::vector<bool>& lo_to_hi);

/// All acyclic orientations in ascending encoding order.
std::vector<Orientation> enumerate_acyclic(const Graph& g);

/// Acyclic orientations with 0 as a sink, ascending encoding order.
std::vector<Orientation> enumerate_sink_zero(const Graph& g);

struct FiringSequence {
  Orientation start;
  std::vector<Vertex> fires;

  /// |F^{-1}(v)| for every vertex v.
  std::vector<int> counts() const;
};

enum class FiringMode {
  Preorder,     ///< any source may fire
  RootedPoset,  ///< 0 is a sink; neither 0 nor its neighbours may fire
};

struct FiringReport {
  Orientation final_orientation;
  std::vector<int> counts;
  /// |F^{-1}(i)| <= |F^{-1}(j)| + 1 across every edge, both directions.
  bool lemma1_ok = false;
  /// RootedPoset: |F^{-1}(i)| <= d(0,i) - 1 per vertex and total length
  /// <= sum of (d(0,i) - 1). Vacuously true in Preorder mode.
  bool bound_ok = false;
  /// sum over nonzero i of (d(0,i) - 1); 0 in Preorder mode.
  long length_bound = 0;
};

/// Replays the sequence, throwing FiringError (with the 1-based step) when
/// a fired vertex is not a source or is forbidden in RootedPoset mode.
FiringReport validate_firing_sequence(const FiringSequence& seq, FiringMode mode);

}  // namespace orientlat
