#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "orientlat/firing_poset.hpp"

namespace orientlat {

enum class BoundKind { Meet, Join };

/// Greatest lower bound (Meet) or least upper bound (Join) of a and b found
/// by scanning every member of c. Throws CounterexampleError when the
/// bound does not exist or is not unique.
Orientation poset_bound(const Component& c, const Orientation& a, const Orientation& b,
                        BoundKind kind);

/// Same bound computed through the geometry: a is lifted canonically to x,
/// b is lifted into the region of x along a zigzag path to y, and the
/// answer is phi(x ^ y) or phi(x v y).
Orientation geometric_bound(const Component& c, const Orientation& a, const Orientation& b,
                            BoundKind kind);

/// A finite lattice on {0, ..., size-1} with tabulated meet and join.
class FiniteLattice {
 public:
  /// Tabulates bounds from a partial order. Throws CounterexampleError when
  /// some pair lacks a unique meet or join.
  static FiniteLattice from_order(std::size_t size,
                                  const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return size_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size_ + b]; }

 private:
  std::size_t size_ = 0;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
};

/// Order of a component, indexed by position in c.members.
FiniteLattice component_lattice(const Component& c);

using BinaryOp = std::function<std::size_t(std::size_t, std::size_t)>;

/// Checks a^(b v c) = (a^b) v (a^c) and its dual over all ordered triples.
bool is_distributive(std::size_t size, const BinaryOp& meet, const BinaryOp& join);
bool is_distributive(const FiniteLattice& lattice);

/// The unique minimal member of c. Throws CounterexampleError when there are
/// several, or when the minimum has a sink other than 0.
Orientation component_minimum(const Component& c);

}  // namespace orientlat
