#include "orientlat/sampling.hpp"

#include <algorithm>

#include "orientlat/errors.hpp"

namespace orientlat {

namespace {

template <typename T>
T pick(std::span<const T> items, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

}  // namespace

Point random_point(const Graph& g, Rng& rng, const PointSampling& opts) {
  std::uniform_int_distribution<long> den(1, opts.max_denominator);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Rational> coords(g.vertex_count());
    for (std::size_t i = 1; i < coords.size(); ++i) {
      const long q = den(rng);
      std::uniform_int_distribution<long> num(-opts.coordinate_span * q, opts.coordinate_span * q);
      coords[i] = Rational(num(rng), q);
      coords[i].canonicalize();
    }
    Point x(std::move(coords));
    if (!arrangement_hit(g, x)) return x;
  }
  throw GeometryError("could not sample a point off the arrangement");
}

Rational region_slack(const Graph& g, const Point& x) {
  Rational slack = 1;
  for (const Edge& e : g.edges()) {
    const Rational f = frac_of(x[e.hi] - x[e.lo]);
    slack = std::min({slack, f, Rational(1 - f)});
  }
  return slack;
}

Point jitter_in_region(const Graph& g, const Point& x, Rng& rng, bool nonnegative_only) {
  constexpr long kSteps = 1000;
  const Rational half = region_slack(g, x) / 2;
  std::uniform_int_distribution<long> step(nonnegative_only ? 0 : -kSteps, kSteps);
  std::vector<Rational> coords(x.coords().begin(), x.coords().end());
  for (std::size_t i = 1; i < coords.size(); ++i) {
    Rational r(step(rng), kSteps + 1);
    r.canonicalize();
    coords[i] += half * r;
  }
  return Point(std::move(coords));
}

Point random_region_partner(const Graph& g, const Point& x, Rng& rng, int max_moves,
                            bool monotone) {
  std::uniform_int_distribution<int> count(0, max_moves);
  Point z = x;
  for (int k = count(rng); k > 0; --k) {
    const Orientation o = phi(g, z);
    std::vector<std::pair<Vertex, bool>> moves;  // (vertex, upward)
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (g.adjacent(0, v)) continue;
      if (o.is_source(v)) moves.emplace_back(v, true);
      if (!monotone && o.is_sink(v)) moves.emplace_back(v, false);
    }
    if (moves.empty()) break;
    const auto [v, upward] = pick<std::pair<Vertex, bool>>(moves, rng);
    z = upward ? lift_fire(g, z, v) : lift_unfire(g, z, v);
  }
  return jitter_in_region(g, z, rng, monotone);
}

FiringSequence random_firing_sequence(std::span<const Orientation> pool, FiringMode mode,
                                      Rng& rng, int max_length) {
  if (pool.empty()) throw InputError("empty orientation pool");
  FiringSequence seq{pick(pool, rng), {}};
  Orientation current = seq.start;
  std::bernoulli_distribution stop(1.0 / 8);
  for (int step = 0; step < max_length; ++step) {
    std::vector<Vertex> options;
    if (mode == FiringMode::RootedPoset) {
      options = allowed_firings_p0(current);
    } else {
      options = vertex_roles(current).sources;
    }
    if (options.empty() || stop(rng)) break;
    const Vertex v = pick<Vertex>(options, rng);
    seq.fires.push_back(v);
    current = fire(current, v);
  }
  return seq;
}

}  // namespace orientlat
