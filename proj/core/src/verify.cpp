#include "orientlat/verify.hpp"

#include <exception>
#include <sstream>

#include "orientlat/chromatic.hpp"
#include "orientlat/errors.hpp"
#include "orientlat/graph_catalog.hpp"

namespace orientlat {

namespace {

constexpr std::size_t kMaxExamples = 5;

std::string describe(const Orientation& o) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto [t, h] : o.arcs()) {
    out << (first ? "" : ",") << t << "->" << h;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string describe(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.dimension(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + ")";
}

ComponentReport check_component(const Component& c) {
  const Poset& p = *c.poset;
  ComponentReport r;
  r.size = c.size();

  std::optional<FiniteLattice> lattice;
  try {
    lattice = component_lattice(c);
    r.is_lattice = true;
  } catch (const CounterexampleError& e) {
    r.failures.push_back(std::string("not a lattice: ") + e.what());
  }
  if (lattice) {
    r.is_distributive = is_distributive(*lattice);
    if (!r.is_distributive) r.failures.push_back("not distributive");
  }

  try {
    r.minimum = component_minimum(c);
    r.minimum_unique_sink_zero = true;
  } catch (const CounterexampleError& e) {
    r.failures.push_back(e.what());
  }
  std::size_t unique_sink = 0;
  for (std::size_t v : c.members)
    unique_sink += vertex_roles(p.element(v)).sinks == std::vector<Vertex>{0};
  r.minimum_is_only_unique_sink = unique_sink == 1;
  if (!r.minimum_is_only_unique_sink) {
    r.failures.push_back(std::to_string(unique_sink) + " members have 0 as their only sink");
  }

  if (lattice) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        const Orientation& oa = p.element(c.members[a]);
        const Orientation& ob = p.element(c.members[b]);
        for (BoundKind kind : {BoundKind::Meet, BoundKind::Join}) {
          ++r.pairs_checked;
          const std::size_t expected = kind == BoundKind::Meet ? lattice->meet(a, b)
                                                               : lattice->join(a, b);
          try {
            if (geometric_bound(c, oa, ob, kind) == p.element(c.members[expected])) continue;
          } catch (const std::exception& e) {
            if (r.mismatches < kMaxExamples) r.failures.push_back(e.what());
          }
          if (++r.mismatches <= kMaxExamples) {
            r.failures.push_back(std::string("geometric ") +
                                 (kind == BoundKind::Meet ? "meet" : "join") + " differs for " +
                                 describe(oa) + ", " + describe(ob));
          }
        }
      }
    }
    r.geometric_agrees = r.mismatches == 0;
  }
  return r;
}

}  // namespace

void PropertyTally::record(bool ok, const std::string& detail) {
  ++checks;
  if (ok) return;
  if (++violations <= kMaxExamples) examples.push_back(detail);
}

LatticeReport verify_theorem(const Graph& g) {
  LatticeReport report{g};
  std::optional<Poset> poset;
  try {
    poset = Poset::build(g);
  } catch (const CounterexampleError& e) {
    report.failures.push_back(e.what());
    return report;
  }
  report.poset_size = poset->size();
  report.non_cover_firings = poset->non_cover_firings().size();

  const auto comps = components(*poset);
  report.component_count = comps.size();
  bool all_components = true;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    report.components.push_back(check_component(comps[k]));
    if (!report.components.back().pass()) {
      all_components = false;
      report.failures.push_back("component " + std::to_string(k) + " failed");
    }
  }

  try {
    report.greene_zaslavsky = greene_zaslavsky_count(g);
  } catch (const CounterexampleError& e) {
    report.failures.push_back(e.what());
    report.greene_zaslavsky = -1;
  }
  report.unique_sink_count = count_unique_sink_zero(g);
  report.counts_match =
      report.greene_zaslavsky == static_cast<std::int64_t>(report.component_count) &&
      report.unique_sink_count == report.component_count;
  if (!report.counts_match) {
    report.failures.push_back("component count " + std::to_string(report.component_count) +
                              ", chromatic count " + std::to_string(report.greene_zaslavsky) +
                              ", unique-sink count " + std::to_string(report.unique_sink_count));
  }
  report.pass = report.counts_match && all_components;
  return report;
}

PropertyTally check_lift_round_trips(const Graph& g, std::size_t samples, Rng& rng) {
  PropertyTally tally{"lift round trips"};
  for (std::size_t s = 0; s < samples; ++s) {
    const Point x = random_point(g, rng);
    const Orientation o = phi(g, x);
    const RegionSignature sig = region_signature(g, x);
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (g.adjacent(0, v)) continue;
      if (o.is_source(v)) {
        const Point z = lift_fire(g, x, v);
        const bool ok = !arrangement_hit(g, z) && phi(g, z) == fire(o, v) &&
                        region_signature(g, z) == sig && point_leq(x, z);
        tally.record(ok, "lift_fire at " + std::to_string(v) + " from " + describe(x));
      } else if (o.is_sink(v)) {
        const Point z = lift_unfire(g, x, v);
        const bool ok = !arrangement_hit(g, z) && fire(phi(g, z), v) == o &&
                        region_signature(g, z) == sig && point_leq(z, x);
        tally.record(ok, "lift_unfire at " + std::to_string(v) + " from " + describe(x));
      }
    }
  }
  return tally;
}

std::vector<PropertyTally> check_firing_bounds(const Graph& g, std::size_t samples, Rng& rng) {
  PropertyTally rooted{"firing bounds (rooted)"};
  PropertyTally free{"count inequality (unrestricted)"};
  const auto sink_zero = enumerate_sink_zero(g);
  const auto acyclic = enumerate_acyclic(g);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto seq = random_firing_sequence(sink_zero, FiringMode::RootedPoset, rng);
    const auto r = validate_firing_sequence(seq, FiringMode::RootedPoset);
    rooted.record(r.lemma1_ok && r.bound_ok,
                  "sequence of length " + std::to_string(seq.fires.size()) + " from " +
                      describe(seq.start));
    const auto any = random_firing_sequence(acyclic, FiringMode::Preorder, rng);
    const auto q = validate_firing_sequence(any, FiringMode::Preorder);
    free.record(q.lemma1_ok, "sequence of length " + std::to_string(any.fires.size()) +
                                 " from " + describe(any.start));
  }
  return {rooted, free};
}

std::vector<PropertyTally> check_geometry_lemmas(const Graph& g, const Poset& p,
                                                 std::size_t samples, Rng& rng) {
  PropertyTally closure{"region closure"};
  PropertyTally cube{"cube anchor constancy"};
  PropertyTally monotone{"monotonicity"};
  PropertyTally homomorphism{"lattice homomorphism"};
  const auto comps = components(p);
  auto component_of = [&](const Orientation& o) -> const Component* {
    for (const auto& c : comps)
      if (c.contains(o)) return &c;
    return nullptr;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const Point x = random_point(g, rng);
    const bool upward = s % 2 == 1;
    const Point y = random_region_partner(g, x, rng, 4, upward);
    const std::string where = describe(x) + " / " + describe(y);
    const auto sig = region_signature(g, x);

    const Point lo = point_meet(x, y), hi = point_join(x, y);
    auto in_region = [&](const Point& z) {
      return !arrangement_hit(g, z) && region_signature(g, z) == sig;
    };
    if (!in_region(y)) {
      closure.record(false, "sampler left the region: " + where);
      continue;
    }
    const bool closed = in_region(lo) && in_region(hi);
    closure.record(closed, where);
    if (!closed) continue;

    const Orientation ox = phi(g, x), oy = phi(g, y);
    const Point nearby = jitter_in_region(g, x, rng);
    if (phi(g, nearby) == ox) cube.record(cube_anchor(nearby) == cube_anchor(x), describe(x));
    if (ox == oy) cube.record(cube_anchor(x) == cube_anchor(y), where);

    if (point_leq(x, y)) monotone.record(p.leq(ox, oy), where);
    const Orientation olo = phi(g, lo), ohi = phi(g, hi);
    monotone.record(p.leq(olo, ox) && p.leq(olo, oy) && p.leq(ox, ohi) && p.leq(oy, ohi), where);

    const Component* c = component_of(ox);
    const bool same = c != nullptr && c->contains(oy);
    homomorphism.record(same && poset_bound(*c, ox, oy, BoundKind::Meet) == olo &&
                            poset_bound(*c, ox, oy, BoundKind::Join) == ohi,
                        where);
  }
  return {closure, cube, monotone, homomorphism};
}

}  // namespace orientlat
