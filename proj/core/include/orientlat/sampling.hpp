#pragma once

#include <random>
#include <span>
#include <utility>

#include "orientlat/geometry.hpp"

namespace orientlat {

using Rng = std::mt19937_64;

struct PointSampling {
  long max_denominator = 1000;
  long coordinate_span = 3;  // coordinates drawn from [-span, span]
};

/// Uniform-ish rational point off the arrangement; rejection sampled.
Point random_point(const Graph& g, Rng& rng, const PointSampling& opts = {});

/// Smallest distance from x_hi - x_lo to an integer over all edges.
Rational region_slack(const Graph& g, const Point& x);

/// Moves every nonzero coordinate by less than half the region slack, so
/// the result stays in the region of x. With nonnegative_only the moves
/// are all >= 0 and the result dominates x.
Point jitter_in_region(const Graph& g, const Point& x, Rng& rng, bool nonnegative_only = false);

/// Second point in the region of x, reached by up to max_moves random
/// lift_fire / lift_unfire moves followed by jitter. With monotone set
/// only upward moves and nonnegative jitter are used, so x <= result.
Point random_region_partner(const Graph& g, const Point& x, Rng& rng, int max_moves,
                            bool monotone = false);

/// Random valid firing sequence. RootedPoset: starts at a random element
/// of `pool` (which must all have sink 0) and fires allowed vertices until
/// none remain or a coin flip stops it. Preorder: fires random sources,
/// at most max_length times.
FiringSequence random_firing_sequence(std::span<const Orientation> pool, FiringMode mode,
                                      Rng& rng, int max_length = 64);

}  // namespace orientlat
