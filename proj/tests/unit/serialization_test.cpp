#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace orientlat {
namespace {

using namespace orientlat::testing;

TEST(Serialization, GraphSchema) {
  EXPECT_EQ(serialize(C4()).dump(), R"({"n":3,"edges":[[0,1],[0,3],[1,2],[2,3]]})");
  EXPECT_EQ(parse_graph(serialize(C4())), C4());
  EXPECT_THROW(parse_graph(Json::parse(R"({"edges":[[0,1]]})")), InputError);
  EXPECT_THROW(parse_graph(Json::parse(R"({"n":2,"edges":[[0,1]]})")), GraphError);
}

TEST(Serialization, OrientationSchema) {
  EXPECT_EQ(serialize(omega_b()).dump(), R"({"edges":[[1,0],[1,2]]})");
  EXPECT_EQ(parse_orientation(P3(), Json::parse(R"({"edges":[[2,1],[1,0]]})")), omega_a());
  EXPECT_THROW(parse_orientation(P3(), Json::parse(R"({"edges":[[2,0],[1,0]]})")),
               OrientationError);
}

TEST(Serialization, FiringSequenceSchema) {
  const FiringSequence f{t_bottom(), {2, 3}};
  const Json j = serialize(f);
  EXPECT_EQ(j.dump(), R"({"start":{"edges":[[1,0],[2,1],[3,1]]},"fires":[2,3]})");
  const auto back = parse_firing_sequence(T(), j);
  EXPECT_EQ(back.start, f.start);
  EXPECT_EQ(back.fires, f.fires);
}

TEST(Serialization, PointSchema) {
  const Point x = pt({0, q(1, 2), q(-1, 8), q(3)});
  EXPECT_EQ(serialize(x).dump(), R"({"coords":["0","1/2","-1/8","3"]})");
  EXPECT_EQ(parse_point(Json::parse(R"({"coords":["0","2/4","-1/8","3/1"]})")), x);
  EXPECT_THROW(parse_point(Json::parse(R"({"coords":["0","0.5"]})")), InputError);
  EXPECT_THROW(parse_point(Json::parse(R"({"coords":["1/2","1"]})")), InputError);
  EXPECT_THROW(parse_point(Json::parse(R"({"coords":[0, 1]})")), InputError);
}

TEST(Serialization, SignatureAndAnchor) {
  const Point x = pt({0, q(1, 2), q(1, 4)});
  EXPECT_EQ(serialize(P3(), region_signature(P3(), x)).dump(), R"({"0-1":0,"1-2":-1})");
  EXPECT_EQ(serialize(cube_anchor(pt({0, q(1, 2), q(-1, 4)}))).dump(), "[0,0,-1]");
}

TEST(Serialization, PosetAndPolynomial) {
  EXPECT_EQ(serialize(build_p0(P3())).dump(),
            R"({"elements":[{"edges":[[1,0],[2,1]]},{"edges":[[1,0],[1,2]]}],"covers":[[0,1]]})");
  EXPECT_EQ(serialize(chromatic_polynomial(K3())).dump(), "[0,2,-3,1]");
}

// Re-serialising parsed output is byte-identical, for every schema that has
// a reader, over every orientation of every small graph.
TEST(Serialization, ReserialisationIsStable) {
  Rng rng(17);
  for (const Graph& g : connected_graphs_up_to(4)) {
    const std::string gs = serialize(g).dump();
    EXPECT_EQ(serialize(parse_graph(Json::parse(gs))).dump(), gs);
    for (const Orientation& o : enumerate_acyclic(g)) {
      const std::string os = serialize(o).dump();
      EXPECT_EQ(serialize(parse_orientation(g, Json::parse(os))).dump(), os);
    }
    const auto pool = enumerate_sink_zero(g);
    const auto seq = random_firing_sequence(pool, FiringMode::RootedPoset, rng);
    const std::string fs = serialize(seq).dump();
    EXPECT_EQ(serialize(parse_firing_sequence(g, Json::parse(fs))).dump(), fs);
    const std::string ps = serialize(random_point(g, rng)).dump();
    EXPECT_EQ(serialize(parse_point(Json::parse(ps))).dump(), ps);
  }
}

}  // namespace
}  // namespace orientlat
