#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "toughwalks/domcycle.hpp"
#include "toughwalks/error.hpp"
#include "toughwalks/kwalk.hpp"
#include "toughwalks/prism.hpp"
#include "toughwalks/serialize.hpp"

namespace toughwalks {
namespace {

using namespace toughwalks::testing;

TEST(SerializeTest, WitnessShapes) {
  const DominatingWitness cyc{CycleW{Cycle{{1, 2, 4}}}};
  EXPECT_EQ(to_json(cyc), Json::parse(R"({"kind":"CycleW","vertices":[1,2,4]})"));
  EXPECT_EQ(to_json(DominatingWitness{EdgeW{Edge{0, 1}}}),
            Json::parse(R"({"kind":"EdgeW","edge":[0,1]})"));
  EXPECT_EQ(to_json(DominatingWitness{VertexW{3}}), Json::parse(R"({"kind":"VertexW","vertex":3})"));
  for (const auto& w : {cyc, DominatingWitness{EdgeW{Edge{0, 1}}}, DominatingWitness{VertexW{3}}}) {
    EXPECT_EQ(dominating_witness_from_json(to_json(w)), w);
  }
}

TEST(SerializeTest, KWalkRoundTrip) {
  const auto w = std::get<KWalk>(
      build_k_walk(fixture_net(), DominatingWitness{CycleW{Cycle{{1, 2, 4}}}}, 2));
  const Json j = to_json(w);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["edges"][0], Json::parse("[0,1,2]"));
  const KWalk back = kwalk_from_json(j);
  EXPECT_EQ(back.edges, w.edges);
  EXPECT_EQ(back.traversal, w.traversal);
}

TEST(SerializeTest, PrismAndCertificate) {
  const PrismCycle pc{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  EXPECT_EQ(to_json(pc), Json::parse("[[0,0],[1,0],[1,1],[0,1]]"));
  EXPECT_EQ(prism_cycle_from_json(to_json(pc)), pc);

  const ToughnessCertificate cert{{1}, 2};
  EXPECT_EQ(to_json(cert), Json::parse(R"({"cutset":[1],"components":2,"bound":"1/2"})"));
  EXPECT_EQ(certificate_from_json(to_json(cert)), cert);
}

TEST(SerializeTest, TraceRecords) {
  const auto r = find_edge_dominating_cycle_with_triangle(triangle_with_edge(), Triangle{0, 1, 2});
  const Json j = to_json(r.trace);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), r.trace.steps.size());
  EXPECT_EQ(j[0]["case"], "START_TRIANGLE");
  for (std::size_t i = 1; i < j.size(); ++i) {
    EXPECT_TRUE(j[i].contains("undominated_edge"));
    EXPECT_TRUE(j[i].contains("cycle_after"));
  }
}

TEST(SerializeTest, RejectsBadShapes) {
  EXPECT_THROW(dominating_witness_from_json(Json::parse(R"({"kind":"Nope"})")), Error);
  EXPECT_THROW(prism_cycle_from_json(Json::parse("[[0]]")), Error);
  EXPECT_THROW(kwalk_from_json(Json::parse("{}")), Error);
}

}  // namespace
}  // namespace toughwalks
