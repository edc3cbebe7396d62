#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace chessideal;
using testing_support::brute_minimal_covers;

TEST(VertexSet, BasicOperations) {
  auto a = VertexSet::of({0, 2, 5});
  auto b = VertexSet::of({2, 3});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(5));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ((a | b), VertexSet::of({0, 2, 3, 5}));
  EXPECT_EQ((a & b), VertexSet::of({2}));
  EXPECT_EQ((a - b), VertexSet::of({0, 5}));
  EXPECT_TRUE(VertexSet::of({2}).subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.min(), 0u);
  EXPECT_EQ(a.elements(), (std::vector<std::size_t>{0, 2, 5}));
  EXPECT_EQ(VertexSet::prefix(4).bits(), 0xFu);
  EXPECT_EQ(VertexSet::prefix(64).size(), 64u);
}

TEST(VertexSet, CapacityIsChecked) {
  EXPECT_NO_THROW(require_vertex_capacity(64));
  EXPECT_THROW(require_vertex_capacity(65), std::length_error);
}

TEST(VertexSet, SubsetEnumerationVisitsEverySubsetOnce) {
  auto s = VertexSet::of({1, 4, 6, 9});
  std::set<VertexSet::word_type> seen;
  VertexSet::word_type last = 0;
  bool first = true;
  for_each_subset(s, [&](VertexSet t) {
    EXPECT_TRUE(t.subset_of(s));
    if (!first) {
      EXPECT_GT(t.bits(), last);
    }
    first = false;
    last = t.bits();
    seen.insert(t.bits());
  });
  EXPECT_EQ(seen.size(), 16u);
}

TEST(VertexSet, DepositScattersBits) {
  std::vector<std::size_t> pos = {2, 5, 7};
  EXPECT_EQ(deposit(0b101, pos), VertexSet::of({2, 7}));
  EXPECT_EQ(deposit(0, pos), VertexSet{});
}

TEST(VertexSet, LexOrderComparesSortedElementLists) {
  LexLess less;
  EXPECT_TRUE(less(VertexSet::of({0, 3}), VertexSet::of({1})));
  EXPECT_TRUE(less(VertexSet::of({0}), VertexSet::of({0, 1})));
  EXPECT_FALSE(less(VertexSet::of({1}), VertexSet::of({0, 5})));
}

TEST(Transversal, DegenerateFamilies) {
  EXPECT_EQ(minimal_transversals({}), (std::vector<VertexSet>{VertexSet{}}));
  EXPECT_TRUE(minimal_transversals({VertexSet::of({1}), VertexSet{}}).empty());
  EXPECT_EQ(minimal_transversals({VertexSet::of({0, 1})}), (std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1})}));
}

TEST(Transversal, MatchesBruteForceOnRandomHypergraphs) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> edge_count(1, 6);
  std::uniform_int_distribution<std::uint64_t> word(1, (1U << 8) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<VertexSet> edges;
    const int k = edge_count(rng);
    for (int i = 0; i < k; ++i) edges.emplace_back(word(rng));
    EXPECT_EQ(minimal_transversals(edges), brute_minimal_covers(edges, 8)) << "trial " << trial;
  }
}
