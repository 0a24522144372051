#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace orientlat {
namespace {

using namespace orientlat::testing;

using Coeffs = std::vector<std::int64_t>;

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_polynomial(parse_edge_list("0 1")).coefficients, (Coeffs{0, -1, 1}));
  EXPECT_EQ(chromatic_polynomial(P3()).coefficients, (Coeffs{0, 1, -2, 1}));
  EXPECT_EQ(chromatic_polynomial(K3()).coefficients, (Coeffs{0, 2, -3, 1}));
  EXPECT_EQ(chromatic_polynomial(C4()).coefficients, (Coeffs{0, -3, 6, -4, 1}));
  EXPECT_EQ(chromatic_polynomial(Graph::from_edges(0, {})).coefficients, (Coeffs{0, 1}));
}

TEST(Chromatic, MatchesColouringInterpolation) {
  auto corpus = connected_graphs_up_to(5);
  for (const auto& g : named_extras()) corpus.push_back(g);
  corpus.push_back(complete_graph(6));
  for (const Graph& g : corpus) {
    const auto p = chromatic_polynomial(g);
    ASSERT_EQ(p.coefficients, oracle::chromatic_by_interpolation(g)) << graph_label(g);
    ASSERT_EQ(p.coefficients.size(), static_cast<std::size_t>(g.vertex_count() + 1));
    EXPECT_EQ(p.coefficients.back(), 1);
    EXPECT_EQ(p.coefficients[0], 0);
    for (std::size_t k = 1; k < p.coefficients.size(); ++k) {
      // Signs alternate: coefficient of t^k has sign (-1)^(nv-k).
      const bool negative = (g.vertex_count() - k) % 2 == 1;
      EXPECT_TRUE(negative ? p.coefficients[k] < 0 : p.coefficients[k] > 0) << graph_label(g);
    }
    EXPECT_EQ(p.evaluate(3), oracle::colourings(g, 3));
  }
}

TEST(GreeneZaslavsky, Examples) {
  EXPECT_EQ(greene_zaslavsky_count(K3()), 2);
  EXPECT_EQ(greene_zaslavsky_count(C4()), 3);
  EXPECT_EQ(greene_zaslavsky_count(P3()), 1);
  EXPECT_EQ(greene_zaslavsky_count(cycle_graph(5)), 4);
  EXPECT_EQ(greene_zaslavsky_count(complete_graph(4)), 6);
  EXPECT_EQ(greene_zaslavsky_count(complete_bipartite(2, 3)), 7);
  EXPECT_EQ(greene_zaslavsky_count(cycle_graph(6)), 5);
}

TEST(GreeneZaslavsky, EqualsUniqueSinkCount) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    const auto expected = oracle::count_unique_sink_zero(g);
    EXPECT_EQ(count_unique_sink_zero(g), expected);
    EXPECT_EQ(greene_zaslavsky_count(g), static_cast<std::int64_t>(expected)) << graph_label(g);
  }
}

}  // namespace
}  // namespace orientlat
