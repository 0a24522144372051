#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orientlat/orientation.hpp"

namespace orientlat {

/// One legal firing inside the rooted poset: element `lower` becomes
/// element `upper` by firing `vertex`.
struct Cover {
  std::size_t lower;
  std::size_t upper;
  Vertex vertex;

  friend bool operator==(const Cover&, const Cover&) = default;
};

/// A move out of an element, either up (a firing) or down (an unfiring).
struct Move {
  std::size_t target;
  Vertex vertex;
};

/// Sources of o other than 0 and the neighbours of 0. Throws
/// OrientationError when 0 is not a sink of o.
std::vector<Vertex> allowed_firings_p0(const Orientation& o);

/// The poset of acyclic orientations with sink 0 ordered by reachability
/// under legal firings.
///
/// `covers()` lists every single legal firing. Whether each of them is a
/// cover of the order in the lattice-theoretic sense is checked rather than
/// assumed: `hasse()` is the transitive reduction of the order and
/// `non_cover_firings()` reports any firing that it drops.
class Poset {
 public:
  /// Enumerates the elements, collects legal firings, computes the
  /// reachability closure and checks antisymmetry (CounterexampleError).
  static Poset build(const Graph& g);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const Orientation> elements() const noexcept { return elements_; }
  const Orientation& element(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(const Orientation& o) const;
  /// Throws OrientationError when o is not an element.
  std::size_t index_of(const Orientation& o) const;

  /// Sorted by (lower, vertex).
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  /// Up moves (firings) from a, ascending vertex.
  std::span<const Move> up(std::size_t a) const { return up_.at(a); }
  /// Down moves (unfirings) from a, ascending vertex.
  std::span<const Move> down(std::size_t a) const { return down_.at(a); }

  bool leq(std::size_t a, std::size_t b) const { return reach_.at(a).at(b); }
  bool leq(const Orientation& a, const Orientation& b) const {
    return leq(index_of(a), index_of(b));
  }

  /// Transitive reduction of the order, as (lower, upper) index pairs.
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;

  /// Legal firings whose endpoints have an intermediate element between
  /// them. Expected to be empty.
  std::vector<Cover> non_cover_firings() const;

 private:
  Poset() = default;

  Graph graph_ = Graph::from_edges(0, {});
  std::vector<Orientation> elements_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Move>> up_;
  std::vector<std::vector<Move>> down_;
  std::vector<std::vector<bool>> reach_;
};

inline Poset build_p0(const Graph& g) { return Poset::build(g); }

/// A weakly connected component of the cover graph. Holds a pointer to its
/// poset, which must outlive it.
struct Component {
  const Poset* poset = nullptr;
  std::vector<std::size_t> members;  // ascending element indices
  std::vector<Cover> covers;         // induced legal firings

  std::size_t size() const noexcept { return members.size(); }
  bool contains(std::size_t element) const;
  bool contains(const Orientation& o) const;
};

/// Components ordered by smallest member index.
std::vector<Component> components(const Poset& p);

/// Shortest chain of legal firings from a up to b; ties broken by
/// ascending fired vertex at each step. Throws OrientationError when
/// a is not below b.
FiringSequence cover_path(const Poset& p, const Orientation& a, const Orientation& b);

enum class StepDirection { Up, Down };

struct ZigzagStep {
  StepDirection direction;
  Vertex vertex;
  Orientation to;
};

/// Shortest walk from a to b in the undirected cover graph of c, each
/// step tagged up (firing) or down (unfiring). Ties broken by ascending
/// vertex. Throws OrientationError when a or b lies outside c.
std::vector<ZigzagStep> zigzag_path(const Component& c, const Orientation& a,
                                    const Orientation& b);

/// Hasse diagram as Graphviz DOT text; nodes labelled by encoding.
std::string to_dot(const Poset& p);

}  // namespace orientlat
