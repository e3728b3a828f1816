#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "toughwalks/error.hpp"
#include "toughwalks/recognition.hpp"

namespace toughwalks {
namespace {

using namespace toughwalks::testing;

TEST(FindInducedLk2Test, Examples) {
  const auto w = find_induced_lk2(two_k2(), 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_FALSE(find_induced_lk2(p4(), 2));
  EXPECT_FALSE(find_induced_lk2(fixture_net(), 2));
}

TEST(FindInducedLk2Test, RejectsZero) {
  try {
    find_induced_lk2(k3(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(FindInducedLk2Test, LargerMatchings) {
  // 3K2 plus one chord between the first two edges.
  const Graph three(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto w = find_induced_lk2(three, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->edges.size(), 3u);
  EXPECT_FALSE(find_induced_lk2(add_edges(three, {{1, 2}}), 3));
  EXPECT_TRUE(find_induced_lk2(c6(), 2));
  EXPECT_FALSE(find_induced_lk2(gen_cycle(8), 3));
  EXPECT_TRUE(find_induced_lk2(gen_cycle(9), 3));
}

TEST(FindInducedLk2Test, BudgetIsEnforced) {
  const Graph big(12, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}});
  try {
    find_induced_lk2(big, 6, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Is2K2FreeTest, Examples) {
  EXPECT_TRUE(is_2k2_free(gen_split_graph(12, Rational(1, 2), 3)).free);
  const auto six = is_2k2_free(c6());
  EXPECT_FALSE(six.free);
  ASSERT_TRUE(six.witness);
  // Opposite edges of the hexagon.
  EXPECT_EQ(six.witness->edges, (std::vector<Edge>{{0, 1}, {3, 4}}));
  EXPECT_TRUE(is_2k2_free(Graph(0, {})).free);
  EXPECT_TRUE(is_2k2_free(Graph(5, {})).free);
}

TEST(FindTriangleTest, Examples) {
  EXPECT_EQ(find_triangle(k3()), (Triangle{0, 1, 2}));
  EXPECT_FALSE(find_triangle(c5()));
  EXPECT_EQ(find_triangle(fixture_net()), (Triangle{1, 2, 4}));
}

TEST(RecognitionPropertyTest, AgreesWithNaiveScan) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 500; ++round) {
    const auto n = static_cast<std::size_t>(rng() % 13);
    const Graph g = random_graph(rng, n, static_cast<unsigned>(10 + rng() % 80));
    const auto result = is_2k2_free(g);
    ASSERT_EQ(result.free, naive_2k2_free(g)) << round;
    if (result.witness) {
      ASSERT_TRUE(is_induced_matching(g, *result.witness));
    }

    for (std::size_t l : {1u, 3u}) {
      if (auto w = find_induced_lk2(g, l)) {
        ASSERT_TRUE(is_induced_matching(g, *w));
      }
    }

    if (result.free && n > 0) {
      // Vertex deletion keeps 2K2-freeness.
      VertexSet keep = g.full_set();
      keep.reset(rng() % n);
      ASSERT_TRUE(is_2k2_free(g.induced(keep)).free);
    }

    // Incremental check agrees with a full rescan.
    if (result.free && n >= 2) {
      const auto u = static_cast<Vertex>(rng() % n);
      const auto v = static_cast<Vertex>(rng() % n);
      if (u != v && !g.adjacent(u, v)) {
        ASSERT_EQ(addition_creates_2k2(g, u, v), !naive_2k2_free(add_edges(g, {{u, v}})));
      }
    }

    if (auto t = find_triangle(g)) {
      ASSERT_TRUE(is_triangle(g, *t));
    } else {
      for (const Edge& e : g.edges()) {
        ASSERT_FALSE((g.neighbors(e.u) & g.neighbors(e.v)).any());
      }
    }
  }
}

}  // namespace
}  // namespace toughwalks
