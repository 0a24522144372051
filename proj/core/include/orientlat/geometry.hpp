#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orientlat/firing_poset.hpp"
#include "orientlat/orientation.hpp"
#include "orientlat/rational.hpp"

namespace orientlat {

/// A point of the coordinate hyperplane x_0 = 0 with exact coordinates.
/// Whether it avoids the periodic arrangement depends on a graph and is
/// checked by the operations below, not by the constructor.
class Point {
 public:
  /// Throws GeometryError when coords is empty or coords[0] != 0.
  explicit Point(std::vector<Rational> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_.at(i); }
  std::span<const Rational> coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Per-edge slab index floor(x_hi - x_lo), in edge-index order. Two
/// points off the arrangement share a region iff their signatures agree.
struct RegionSignature {
  std::vector<std::int64_t> slabs;
  friend bool operator==(const RegionSignature&, const RegionSignature&) = default;
};

/// Per-vertex floor(x_v); the half-open unit cube containing the point.
struct CubeAnchor {
  std::vector<std::int64_t> floors;
  friend bool operator==(const CubeAnchor&, const CubeAnchor&) = default;
};

/// First edge (by index) whose endpoints differ by an integer, i.e. whose
/// hyperplane family contains x. Throws GeometryError on dimension mismatch.
std::optional<std::size_t> arrangement_hit(const Graph& g, const Point& x);

/// Orients each edge towards the endpoint with the smaller fractional part.
/// The result always has 0 as a sink. Throws GeometryError (naming the
/// edge) when x lies on the arrangement.
Orientation phi(const Graph& g, const Point& x);

RegionSignature region_signature(const Graph& g, const Point& x);
CubeAnchor cube_anchor(const Point& x);

/// A point in [0,1)^n mapping to o: vertices are laid out along the
/// sinks-first linear extension of o (ties by ascending index) at
/// t/(n+1). Throws GeometryError when 0 is not a sink of o.
Point canonical_lift(const Orientation& o);

/// (1 - max_{j>=1} frac(x_j)) / 2, the shift used by the lifting moves.
Rational lift_margin(const Point& x);

/// Moves x within its region so that phi fires i: shifts all nonzero
/// coordinates up by the margin, then pushes coordinate i just past the
/// next integer. Requires i to be a source of phi(x) not adjacent to 0.
Point lift_fire(const Graph& g, const Point& x, Vertex i);

/// Downward counterpart: coordinate i drops just below its floor.
/// Requires i to be a sink of phi(x) not adjacent to 0.
Point lift_unfire(const Graph& g, const Point& x, Vertex i);

/// Chains lift_fire / lift_unfire along steps, checking each intermediate
/// orientation against the step and the final one against target.
Point lift_comparable(const Graph& g, const Point& x, const Orientation& target,
                      std::span<const ZigzagStep> steps);
Point lift_comparable(const Graph& g, const Point& x, const Orientation& target,
                      const FiringSequence& path);

Point point_meet(const Point& x, const Point& y);
Point point_join(const Point& x, const Point& y);
/// Componentwise order.
bool point_leq(const Point& x, const Point& y);

/// x + offsets, where offsets[0] must be 0. Keeps phi and moves the
/// signature by offsets[hi] - offsets[lo] per edge.
Point translate(const Point& x, std::span<const std::int64_t> offsets);

}  // namespace orientlat
