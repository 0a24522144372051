#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace orientlat {
namespace {

using namespace orientlat::testing;

std::multiset<std::size_t> sizes(const std::vector<Component>& cs) {
  std::multiset<std::size_t> out;
  for (const auto& c : cs) out.insert(c.size());
  return out;
}

TEST(AllowedFirings, Examples) {
  EXPECT_EQ(allowed_firings_p0(omega_a()), std::vector<Vertex>{2});
  EXPECT_TRUE(allowed_firings_p0(arcs(K3(), {{1, 0}, {2, 0}, {1, 2}})).empty());
  EXPECT_EQ(allowed_firings_p0(t_bottom()), (std::vector<Vertex>{2, 3}));
  EXPECT_THROW(allowed_firings_p0(arcs(P3(), {{0, 1}, {2, 1}})), OrientationError);
}

TEST(BuildP0, Examples) {
  const Poset p3 = build_p0(P3());
  EXPECT_EQ(p3.size(), 2u);
  ASSERT_EQ(p3.covers().size(), 1u);
  EXPECT_EQ(p3.element(p3.covers()[0].lower), omega_a());
  EXPECT_EQ(p3.element(p3.covers()[0].upper), omega_b());

  const Poset p4 = build_p0(P4());
  EXPECT_EQ(p4.size(), 4u);
  EXPECT_EQ(p4.covers().size(), 3u);
  // A chain: every pair comparable, and some pair at distance three.
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) EXPECT_TRUE(p4.leq(a, b) || p4.leq(b, a));
  const auto bottom = arcs(P4(), {{1, 0}, {2, 1}, {3, 2}});
  const auto top = arcs(P4(), {{1, 0}, {1, 2}, {2, 3}});
  EXPECT_EQ(cover_path(p4, bottom, top).fires.size(), 3u);

  const Poset k3 = build_p0(K3());
  EXPECT_EQ(k3.size(), 2u);
  EXPECT_TRUE(k3.covers().empty());
}

TEST(Leq, Examples) {
  const Poset p = build_p0(P3());
  EXPECT_TRUE(p.leq(omega_a(), omega_b()));
  EXPECT_FALSE(p.leq(omega_b(), omega_a()));
  EXPECT_TRUE(p.leq(omega_a(), omega_a()));
  EXPECT_THROW(p.leq(arcs(P3(), {{0, 1}, {2, 1}}), omega_a()), OrientationError);
}

TEST(Components, Examples) {
  const Poset k3 = build_p0(K3());
  EXPECT_EQ(sizes(components(k3)), (std::multiset<std::size_t>{1, 1}));

  const Poset c4 = build_p0(C4());
  EXPECT_EQ(sizes(components(c4)), (std::multiset<std::size_t>{2, 1, 1}));

  const Poset t = build_p0(T());
  const auto ct = components(t);
  ASSERT_EQ(ct.size(), 1u);
  EXPECT_EQ(ct[0].size(), 4u);
  EXPECT_EQ(ct[0].covers.size(), 4u);
}

TEST(Components, OrderedBySmallestMember) {
  const Poset p = build_p0(cycle_graph(6));
  const auto cs = components(p);
  for (std::size_t k = 1; k < cs.size(); ++k) EXPECT_LT(cs[k - 1].members[0], cs[k].members[0]);
}

TEST(Components, MatchOracleAndPartition) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    const Poset p = build_p0(g);
    const auto cs = components(p);
    EXPECT_EQ(sizes(cs), oracle::component_sizes(g)) << graph_label(g);
    std::vector<int> owner(p.size(), -1);
    for (std::size_t k = 0; k < cs.size(); ++k)
      for (auto m : cs[k].members) {
        EXPECT_EQ(owner[m], -1);
        owner[m] = static_cast<int>(k);
      }
    for (std::size_t a = 0; a < p.size(); ++a) {
      ASSERT_NE(owner[a], -1);
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.leq(a, b)) EXPECT_EQ(owner[a], owner[b]);
    }
  }
}

TEST(CoverPath, Examples) {
  const Poset p3 = build_p0(P3());
  EXPECT_EQ(cover_path(p3, omega_a(), omega_b()).fires, std::vector<Vertex>{2});
  EXPECT_TRUE(cover_path(p3, omega_a(), omega_a()).fires.empty());
  EXPECT_THROW(cover_path(p3, omega_b(), omega_a()), OrientationError);

  const Poset t = build_p0(T());
  EXPECT_EQ(cover_path(t, t_bottom(), t_top()).fires, (std::vector<Vertex>{2, 3}));
}

TEST(CoverPath, RevalidatesInRootedMode) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    const Poset p = build_p0(g);
    const auto dist = distances_from_root(g);
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (!p.leq(a, b)) continue;
        const auto seq = cover_path(p, p.element(a), p.element(b));
        const auto r = validate_firing_sequence(seq, FiringMode::RootedPoset);
        EXPECT_EQ(r.final_orientation, p.element(b));
        EXPECT_TRUE(r.lemma1_ok && r.bound_ok);
        for (Vertex v = 1; v <= g.n(); ++v) EXPECT_LE(r.counts[v], dist[v] - 1);
      }
    }
  }
}

TEST(ZigzagPath, Examples) {
  const Poset t = build_p0(T());
  const auto ct = components(t);
  const auto steps = zigzag_path(ct[0], t_left(), t_right());
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].direction, StepDirection::Down);
  EXPECT_EQ(steps[0].vertex, 2);
  EXPECT_EQ(steps[0].to, t_bottom());
  EXPECT_EQ(steps[1].direction, StepDirection::Up);
  EXPECT_EQ(steps[1].vertex, 3);
  EXPECT_EQ(steps[1].to, t_right());

  const Poset p3 = build_p0(P3());
  const auto c3 = components(p3);
  const auto back = zigzag_path(c3[0], omega_b(), omega_a());
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].direction, StepDirection::Down);
  EXPECT_EQ(back[0].vertex, 2);
  EXPECT_TRUE(zigzag_path(c3[0], omega_a(), omega_a()).empty());

  const Poset k3 = build_p0(K3());
  const auto ck = components(k3);
  EXPECT_THROW(zigzag_path(ck[0], k3.element(0), k3.element(1)), OrientationError);
}

TEST(Hasse, SingleFiringsAreCovers) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    const Poset p = build_p0(g);
    EXPECT_TRUE(p.non_cover_firings().empty()) << graph_label(g);
    EXPECT_EQ(p.hasse().size(), p.covers().size());
  }
}

TEST(Hasse, DotExport) {
  const std::string dot = to_dot(build_p0(P3()));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
}

}  // namespace
}  // namespace orientlat
