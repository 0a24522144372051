#include "orientlat/geometry.hpp"

#include <algorithm>
#include <string>

#include "orientlat/errors.hpp"

namespace orientlat {

namespace {

void require_dimension(const Graph& g, const Point& x) {
  if (x.dimension() != static_cast<std::size_t>(g.vertex_count())) {
    throw GeometryError("point has " + std::to_string(x.dimension()) +
                        " coordinates, graph has " + std::to_string(g.vertex_count()) +
                        " vertices");
  }
}

void require_off_arrangement(const Graph& g, const Point& x) {
  if (auto e = arrangement_hit(g, x)) {
    const Edge& ed = g.edge(*e);
    throw GeometryError("point lies on a hyperplane x_" + std::to_string(ed.lo) + " = x_" +
                        std::to_string(ed.hi) + " + k of edge " + std::to_string(ed.lo) +
                        "-" + std::to_string(ed.hi));
  }
}

void require_movable(const Graph& g, Vertex i) {
  if (i <= 0 || i > g.n()) {
    throw GeometryError("vertex " + std::to_string(i) + " cannot move: root or out of range");
  }
  if (g.adjacent(0, i)) {
    throw GeometryError("vertex " + std::to_string(i) + " is a neighbour of the root");
  }
}

std::vector<Rational> copy_coords(const Point& x) {
  return {x.coords().begin(), x.coords().end()};
}

}  // namespace

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw GeometryError("point needs at least the root coordinate");
  if (coords_[0] != 0) throw GeometryError("root coordinate x_0 must be 0");
}

std::optional<std::size_t> arrangement_hit(const Graph& g, const Point& x) {
  require_dimension(g, x);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (is_integer(x[ed.hi] - x[ed.lo])) return e;
  }
  return std::nullopt;
}

Orientation phi(const Graph& g, const Point& x) {
  require_off_arrangement(g, x);
  std::vector<Rational> fracs;
  fracs.reserve(x.dimension());
  for (const auto& c : x.coords()) fracs.push_back(frac_of(c));
  std::vector<bool> bits(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    // Head is the endpoint with the smaller fractional part.
    bits[e] = fracs[ed.hi] < fracs[ed.lo];
  }
  return Orientation(g, std::move(bits));
}

RegionSignature region_signature(const Graph& g, const Point& x) {
  require_off_arrangement(g, x);
  RegionSignature sig;
  sig.slabs.reserve(g.edge_count());
  for (const Edge& ed : g.edges()) sig.slabs.push_back(to_int64(floor_of(x[ed.hi] - x[ed.lo])));
  return sig;
}

CubeAnchor cube_anchor(const Point& x) {
  CubeAnchor anchor;
  anchor.floors.reserve(x.dimension());
  for (const auto& c : x.coords()) anchor.floors.push_back(to_int64(floor_of(c)));
  return anchor;
}

Point canonical_lift(const Orientation& o) {
  if (!o.is_sink(0)) throw GeometryError("canonical lift needs 0 as a sink");
  const Graph& g = o.graph();
  const int nv = g.vertex_count();

  // Repeatedly place the smallest vertex all of whose out-neighbours are
  // already placed; heads get smaller coordinates than tails.
  std::vector<int> pending_out(nv, 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) ++pending_out[o.tail(e)];
  std::vector<bool> placed(nv, false);
  std::vector<Rational> coords(nv);
  for (int t = 0; t < nv; ++t) {
    Vertex next = 0;
    while (placed[next] || pending_out[next] != 0) ++next;
    placed[next] = true;
    coords[next] = Rational(t, nv);
    coords[next].canonicalize();
    for (std::size_t e : g.incident_edges(next)) {
      if (o.head(e) == next) --pending_out[o.tail(e)];
    }
  }
  return Point(std::move(coords));
}

Rational lift_margin(const Point& x) {
  Rational top = 0;
  for (std::size_t j = 1; j < x.dimension(); ++j) top = std::max(top, frac_of(x[j]));
  return (1 - top) / 2;
}

Point lift_fire(const Graph& g, const Point& x, Vertex i) {
  require_movable(g, i);
  const Orientation before = phi(g, x);
  if (!before.is_source(i)) {
    throw GeometryError("vertex " + std::to_string(i) + " is not a source of phi(x)");
  }
  const Rational margin = lift_margin(x);
  auto coords = copy_coords(x);
  for (std::size_t j = 1; j < coords.size(); ++j) coords[j] += margin;
  coords[i] = Rational(ceil_of(coords[i])) + margin / 2;
  return Point(std::move(coords));
}

Point lift_unfire(const Graph& g, const Point& x, Vertex i) {
  require_movable(g, i);
  const Orientation before = phi(g, x);
  if (!before.is_sink(i)) {
    throw GeometryError("vertex " + std::to_string(i) + " is not a sink of phi(x)");
  }
  const Rational margin = lift_margin(x);
  auto coords = copy_coords(x);
  coords[i] = Rational(floor_of(coords[i])) - margin / 2;
  return Point(std::move(coords));
}

Point lift_comparable(const Graph& g, const Point& x, const Orientation& target,
                      std::span<const ZigzagStep> steps) {
  Point z = x;
  std::size_t k = 0;
  for (const ZigzagStep& step : steps) {
    ++k;
    z = step.direction == StepDirection::Up ? lift_fire(g, z, step.vertex)
                                            : lift_unfire(g, z, step.vertex);
    if (!(phi(g, z) == step.to)) {
      throw GeometryError("step " + std::to_string(k) + " does not reach its stated orientation");
    }
  }
  if (!(phi(g, z) == target)) throw GeometryError("steps do not end at the target orientation");
  return z;
}

Point lift_comparable(const Graph& g, const Point& x, const Orientation& target,
                      const FiringSequence& path) {
  std::vector<ZigzagStep> steps;
  Orientation current = path.start;
  for (Vertex v : path.fires) {
    current = fire(current, v);
    steps.push_back({StepDirection::Up, v, current});
  }
  return lift_comparable(g, x, target, steps);
}

namespace {

template <typename Pick>
Point componentwise(const Point& x, const Point& y, Pick pick) {
  if (x.dimension() != y.dimension()) throw GeometryError("points differ in dimension");
  std::vector<Rational> out;
  out.reserve(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) out.push_back(pick(x[i], y[i]));
  return Point(std::move(out));
}

}  // namespace

Point point_meet(const Point& x, const Point& y) {
  return componentwise(x, y, [](const Rational& a, const Rational& b) { return std::min(a, b); });
}

Point point_join(const Point& x, const Point& y) {
  return componentwise(x, y, [](const Rational& a, const Rational& b) { return std::max(a, b); });
}

bool point_leq(const Point& x, const Point& y) {
  if (x.dimension() != y.dimension()) throw GeometryError("points differ in dimension");
  for (std::size_t i = 0; i < x.dimension(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Point translate(const Point& x, std::span<const std::int64_t> offsets) {
  if (offsets.size() != x.dimension()) throw GeometryError("offset dimension mismatch");
  if (offsets[0] != 0) throw GeometryError("root offset must be 0");
  auto coords = copy_coords(x);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += Rational(Integer(static_cast<long>(offsets[i])));
  return Point(std::move(coords));
}

}  // namespace orientlat
