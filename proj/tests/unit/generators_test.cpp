#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "toughwalks/generators.hpp"
#include "toughwalks/oracles.hpp"
#include "toughwalks/recognition.hpp"

namespace toughwalks {
namespace {

using namespace toughwalks::testing;

TEST(FixtureNetTest, Shape) {
  const Graph net = fixture_net();
  EXPECT_EQ(net.n(), 6u);
  EXPECT_EQ(net.m(), 6u);
  EXPECT_TRUE(is_2k2_free(net).free);
  EXPECT_EQ(brute_force_toughness(net).value(), Rational(1, 2));
}

TEST(SplitGraphTest, Examples) {
  EXPECT_EQ(gen_split_graph(1, Rational(1, 2), 3).n(), 1u);
  const Graph full = gen_split_graph(10, Rational(1), 9);
  EXPECT_TRUE(is_2k2_free(full).free);
  EXPECT_EQ(gen_split_graph(8, Rational(1, 2), 42), gen_split_graph(8, Rational(1, 2), 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_TRUE(naive_2k2_free(gen_split_graph(12, Rational(1, 3), seed)));
  }
}

TEST(MultipartiteTest, Examples) {
  EXPECT_EQ(gen_complete_multipartite({1, 1, 1}), gen_complete(3));
  const Graph c4_like = gen_complete_multipartite({2, 2});
  EXPECT_EQ(c4_like.m(), 4u);
  EXPECT_TRUE(is_cycle_in(c4_like, *find_any_cycle(c4_like)));
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4_like.degree(v), 2u);
  const Graph k33 = gen_complete_multipartite({3, 3});
  EXPECT_EQ(k33.m(), 9u);
  EXPECT_TRUE(is_2k2_free(k33).free);
}

TEST(PerturbedTest, Examples) {
  EXPECT_EQ(gen_2k2_free_perturbed(c4(), 0, 1), c4());
  const Graph chorded = gen_2k2_free_perturbed(c4(), 1, 1);
  EXPECT_EQ(chorded.m(), 5u);
  EXPECT_TRUE(is_2k2_free(chorded).free);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph base = gen_split_graph(10, Rational(1, 4), seed);
    EXPECT_TRUE(naive_2k2_free(gen_2k2_free_perturbed(base, 6, seed)));
  }
}

TEST(CorpusTest, ConnectedTwoK2FreeAndDeterministic) {
  const CorpusOptions opts{.count = 60, .min_n = 4, .max_n = 14, .seed = 8};
  const auto a = gen_corpus(opts);
  EXPECT_EQ(a, gen_corpus(opts));
  ASSERT_EQ(a.size(), 60u);
  for (const Graph& g : a) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(naive_2k2_free(g));
    EXPECT_GE(g.n(), 4u);
    EXPECT_LE(g.n(), 14u);
  }
}

TEST(CorpusTest, ThreeK2Free) {
  const auto corpus = gen_3k2_corpus({.count = 40, .min_n = 5, .max_n = 10, .seed = 4});
  ASSERT_EQ(corpus.size(), 40u);
  for (const Graph& g : corpus) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(find_induced_lk2(g, 3));
    EXPECT_LE(g.n(), 10u);
  }
}

TEST(SeededRngTest, BoundedAndDeterministic) {
  SeededRng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, b.below(7));
  }
  SeededRng c(1);
  EXPECT_FALSE(c.chance(Rational(0)));
  EXPECT_TRUE(c.chance(Rational(1)));
}

}  // namespace
}  // namespace toughwalks
