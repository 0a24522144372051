#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace orientlat {
namespace {

using namespace orientlat::testing;

TEST(VerifyTheorem, Examples) {
  const auto k3 = verify_theorem(K3());
  EXPECT_TRUE(k3.pass);
  EXPECT_EQ(k3.component_count, 2u);
  EXPECT_EQ(k3.greene_zaslavsky, 2);

  const auto t = verify_theorem(T());
  EXPECT_TRUE(t.pass);
  ASSERT_EQ(t.component_count, 1u);
  EXPECT_EQ(t.components[0].size, 4u);
  EXPECT_EQ(t.components[0].minimum, t_bottom());
  EXPECT_EQ(t.greene_zaslavsky, 1);

  const auto c4 = verify_theorem(C4());
  EXPECT_TRUE(c4.pass);
  EXPECT_EQ(c4.component_count, 3u);
  EXPECT_EQ(c4.greene_zaslavsky, 3);
  EXPECT_EQ(c4.unique_sink_count, 3u);
  EXPECT_TRUE(c4.counts_match);
  EXPECT_EQ(c4.non_cover_firings, 0u);
}

TEST(VerifyTheorem, ReportFieldsConsistent) {
  for (const Graph& g : named_extras()) {
    const auto r = verify_theorem(g);
    EXPECT_TRUE(r.pass) << graph_label(g);
    std::size_t total = 0;
    for (const auto& c : r.components) {
      total += c.size;
      EXPECT_EQ(c.pairs_checked, 2 * c.size * c.size);
      EXPECT_TRUE(c.failures.empty());
    }
    EXPECT_EQ(total, r.poset_size);
    EXPECT_TRUE(r.failures.empty());
  }
}

TEST(PropertyTally, RecordsViolations) {
  PropertyTally t{"demo"};
  t.record(true, "fine");
  EXPECT_TRUE(t.pass());
  for (int i = 0; i < 8; ++i) t.record(false, "bad " + std::to_string(i));
  EXPECT_FALSE(t.pass());
  EXPECT_EQ(t.checks, 9u);
  EXPECT_EQ(t.violations, 8u);
  EXPECT_EQ(t.examples.size(), 5u);
}

TEST(SampledChecks, SmallBatchPasses) {
  Rng rng(2024);
  const Graph g = cycle_graph(5);
  EXPECT_TRUE(check_lift_round_trips(g, 50, rng).pass());
  for (const auto& t : check_firing_bounds(g, 50, rng)) EXPECT_TRUE(t.pass()) << t.name;
  const Poset p = build_p0(g);
  for (const auto& t : check_geometry_lemmas(g, p, 50, rng)) {
    EXPECT_TRUE(t.pass()) << t.name;
    EXPECT_GT(t.checks, 0u) << t.name;
  }
}

}  // namespace
}  // namespace orientlat
