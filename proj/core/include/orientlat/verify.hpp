#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orientlat/lattice.hpp"
#include "orientlat/sampling.hpp"

namespace orientlat {

struct ComponentReport {
  std::size_t size = 0;
  bool is_lattice = false;
  bool is_distributive = false;
  std::optional<Orientation> minimum;
  /// The minimum has 0 as its only sink.
  bool minimum_unique_sink_zero = false;
  /// No other member has 0 as its only sink.
  bool minimum_is_only_unique_sink = false;
  /// geometric_bound == poset_bound on every ordered pair, both kinds.
  bool geometric_agrees = false;
  std::size_t pairs_checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;

  bool pass() const {
    return is_lattice && is_distributive && minimum_unique_sink_zero &&
           minimum_is_only_unique_sink && geometric_agrees;
  }
};

struct LatticeReport {
  Graph graph;
  std::size_t poset_size = 0;
  std::vector<ComponentReport> components = {};
  std::size_t component_count = 0;
  std::int64_t greene_zaslavsky = 0;
  std::size_t unique_sink_count = 0;
  /// Legal firings that are not covers of the order (expected: none).
  std::size_t non_cover_firings = 0;
  /// component count == signed linear coefficient == unique-sink count.
  bool counts_match = false;
  /// counts_match and every component passes.
  bool pass = false;
  std::vector<std::string> failures = {};
};

/// Builds the rooted poset and checks every component: lattice, both
/// distributive laws, unique minimum with sole sink 0, geometric bounds
/// equal to brute-force bounds; then the component count against the
/// chromatic polynomial and the unique-sink enumeration. Failures become
/// report entries; nothing is thrown for a failing check.
LatticeReport verify_theorem(const Graph& g);

/// Outcome of one randomised property over a batch of samples.
struct PropertyTally {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples = {};  // first few violations

  bool pass() const { return violations == 0; }
  void record(bool ok, const std::string& detail);
};

/// lift_fire / lift_unfire coherence on `samples` random points: phi moves
/// by exactly one firing (unfiring) and region signatures are unchanged.
PropertyTally check_lift_round_trips(const Graph& g, std::size_t samples, Rng& rng);

/// On `samples` random legal sequences in the rooted poset: the per-edge
/// count inequality and the length bound. Also the count inequality alone
/// on as many unrestricted sequences (any source may fire).
std::vector<PropertyTally> check_firing_bounds(const Graph& g, std::size_t samples, Rng& rng);

/// Region closure under meet and join, cube-anchor constancy on fibres,
/// monotonicity of phi, and phi(x ^ y) / phi(x v y) equal to the poset
/// bounds, each on `samples` random same-region pairs.
std::vector<PropertyTally> check_geometry_lemmas(const Graph& g, const Poset& p,
                                                 std::size_t samples, Rng& rng);

}  // namespace orientlat
