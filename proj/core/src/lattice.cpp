#include "orientlat/lattice.hpp"

#include <algorithm>
#include <string>

#include "orientlat/errors.hpp"
#include "orientlat/geometry.hpp"

namespace orientlat {

namespace {

const char* kind_name(BoundKind kind) { return kind == BoundKind::Meet ? "meet" : "join"; }

// Shared brute-force scan; `below(x, y)` is the order oriented so that the
// wanted bound is the greatest candidate.
template <typename Below>
std::size_t extreme_bound(std::size_t size, std::size_t a, std::size_t b, Below below,
                          const char* what) {
  std::vector<std::size_t> candidates;
  for (std::size_t c = 0; c < size; ++c)
    if (below(c, a) && below(c, b)) candidates.push_back(c);
  for (std::size_t g : candidates) {
    bool greatest = true;
    for (std::size_t c : candidates) greatest = greatest && below(c, g);
    if (greatest) return g;
  }
  std::size_t maximal = 0;
  for (std::size_t g : candidates) {
    bool is_max = true;
    for (std::size_t c : candidates) is_max = is_max && (c == g || !below(g, c));
    maximal += is_max;
  }
  throw CounterexampleError(std::string("no unique ") + what + " for elements " +
                            std::to_string(a) + " and " + std::to_string(b) + " (" +
                            std::to_string(maximal) + " extremal candidates)");
}

std::size_t local_index(const Component& c, const Orientation& o) {
  const auto global = c.poset->find(o);
  if (!global || !c.contains(*global)) {
    throw OrientationError("orientation is not a member of the component");
  }
  return static_cast<std::size_t>(
      std::lower_bound(c.members.begin(), c.members.end(), *global) - c.members.begin());
}

}  // namespace

Orientation poset_bound(const Component& c, const Orientation& a, const Orientation& b,
                        BoundKind kind) {
  const Poset& p = *c.poset;
  const auto& m = c.members;
  auto leq = [&](std::size_t x, std::size_t y) { return p.leq(m[x], m[y]); };
  const std::size_t ia = local_index(c, a), ib = local_index(c, b);
  const std::size_t found =
      kind == BoundKind::Meet
          ? extreme_bound(m.size(), ia, ib, leq, "meet")
          : extreme_bound(m.size(), ia, ib, [&](std::size_t x, std::size_t y) { return leq(y, x); },
                          "join");
  return p.element(m[found]);
}

Orientation geometric_bound(const Component& c, const Orientation& a, const Orientation& b,
                            BoundKind kind) {
  local_index(c, a);
  local_index(c, b);
  const Graph& g = c.poset->graph();
  const Point x = canonical_lift(a);
  const auto steps = zigzag_path(c, a, b);
  const Point y = lift_comparable(g, x, b, steps);
  const Point bound = kind == BoundKind::Meet ? point_meet(x, y) : point_join(x, y);
  const Orientation out = phi(g, bound);
  if (!c.contains(out)) {
    throw CounterexampleError(std::string("geometric ") + kind_name(kind) +
                              " left the component");
  }
  return out;
}

FiniteLattice FiniteLattice::from_order(
    std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq) {
  FiniteLattice lattice;
  lattice.size_ = size;
  lattice.meet_.resize(size * size);
  lattice.join_.resize(size * size);
  auto geq = [&](std::size_t x, std::size_t y) { return leq(y, x); };
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      const auto m = extreme_bound(size, a, b, leq, "meet");
      const auto j = extreme_bound(size, a, b, geq, "join");
      lattice.meet_[a * size + b] = lattice.meet_[b * size + a] = m;
      lattice.join_[a * size + b] = lattice.join_[b * size + a] = j;
    }
  }
  return lattice;
}

FiniteLattice component_lattice(const Component& c) {
  const Poset& p = *c.poset;
  const auto& m = c.members;
  return FiniteLattice::from_order(
      m.size(), [&](std::size_t x, std::size_t y) { return p.leq(m[x], m[y]); });
}

bool is_distributive(std::size_t size, const BinaryOp& meet, const BinaryOp& join) {
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::size_t c = 0; c < size; ++c) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
        if (join(a, meet(b, c)) != meet(join(a, b), join(a, c))) return false;
      }
    }
  }
  return true;
}

bool is_distributive(const FiniteLattice& lattice) {
  return is_distributive(
      lattice.size(), [&](std::size_t a, std::size_t b) { return lattice.meet(a, b); },
      [&](std::size_t a, std::size_t b) { return lattice.join(a, b); });
}

Orientation component_minimum(const Component& c) {
  const Poset& p = *c.poset;
  std::vector<std::size_t> minimal;
  for (std::size_t v : c.members)
    if (p.down(v).empty()) minimal.push_back(v);
  if (minimal.size() != 1) {
    throw CounterexampleError("component has " + std::to_string(minimal.size()) +
                              " minimal elements");
  }
  const Orientation& low = p.element(minimal.front());
  if (vertex_roles(low).sinks != std::vector<Vertex>{0}) {
    throw CounterexampleError("component minimum has a sink other than 0");
  }
  return low;
}

}  // namespace orientlat
