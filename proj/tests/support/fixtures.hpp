#pragma once

#include <utility>
#include <vector>

#include "orientlat/orientlat.hpp"

namespace orientlat::testing {

inline Graph P3() { return parse_edge_list("0 1\n1 2"); }
inline Graph T() { return parse_edge_list("0 1\n1 2\n1 3"); }
inline Graph K3() { return parse_edge_list("0 1\n1 2\n0 2"); }
inline Graph C4() { return parse_edge_list("0 1\n1 2\n2 3\n0 3"); }
inline Graph P4() { return parse_edge_list("0 1\n1 2\n2 3"); }

inline Orientation arcs(const Graph& g, std::vector<std::pair<Vertex, Vertex>> a) {
  return Orientation::from_arcs(g, a);
}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Point pt(std::vector<Rational> coords) { return Point(std::move(coords)); }

// P3 orientations used throughout: a has 2 as source, b has 2 as sink.
inline Orientation omega_a() { return arcs(P3(), {{1, 0}, {2, 1}}); }
inline Orientation omega_b() { return arcs(P3(), {{1, 0}, {1, 2}}); }

inline Orientation t_bottom() { return arcs(T(), {{1, 0}, {2, 1}, {3, 1}}); }
inline Orientation t_top() { return arcs(T(), {{1, 0}, {1, 2}, {1, 3}}); }
inline Orientation t_left() { return arcs(T(), {{1, 0}, {1, 2}, {3, 1}}); }
inline Orientation t_right() { return arcs(T(), {{1, 0}, {2, 1}, {1, 3}}); }

/// Extra corpus graphs beyond the exhaustive small-graph list.
inline std::vector<Graph> named_extras() {
  return {cycle_graph(6), path_graph(6), complete_graph(4), complete_bipartite(2, 3)};
}

}  // namespace orientlat::testing
