#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sombor/canonical.hpp"
#include "sombor/enumeration.hpp"

namespace sombor {
namespace {

constexpr std::size_t kFreeTreeCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};

std::set<CanonicalCode> codes_of(const std::vector<Tree>& trees) {
  std::set<CanonicalCode> codes;
  for (const Tree& t : trees) codes.insert(canonical_code(t));
  return codes;
}

TEST(EnumerationTest, SmallOrders) {
  const auto four = enumerate_free_trees(4);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(codes_of(four), codes_of({path_tree(4), star_tree(4)}));
  EXPECT_EQ(enumerate_free_trees(7).size(), 11u);
  EXPECT_EQ(enumerate_free_trees(10).size(), 106u);
}

TEST(EnumerationTest, CountsUpToTwelve) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(count_free_trees(n), kFreeTreeCounts[n - 1]) << "n=" << n;
  }
}

TEST(EnumerationTest, MatchesPruferDedupeUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(codes_of(enumerate_free_trees(n)), oracle::prufer_free_tree_codes(n)) << "n=" << n;
  }
}

TEST(EnumerationTest, MatchesLeafExtensionUpToTwelve) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto generated = enumerate_free_trees(n);
    const auto codes = codes_of(generated);
    EXPECT_EQ(codes.size(), generated.size()) << "duplicate class at n=" << n;
    EXPECT_EQ(codes, codes_of(oracle::leaf_extension_trees(n))) << "n=" << n;
  }
}

TEST(EnumerationTest, DeterministicOrder) {
  const auto a = enumerate_free_trees(9);
  const auto b = enumerate_free_trees(9);
  EXPECT_EQ(a, b);
  // the stream starts from the path
  EXPECT_TRUE(isomorphic(a.front(), path_tree(9)));
}

TEST(EnumerationTest, CapIsEnforced) {
  EXPECT_THROW(FreeTreeGenerator(21), SizeError);
  EXPECT_THROW(FreeTreeGenerator(13, 12), SizeError);
  EXPECT_THROW(FreeTreeGenerator(0), InputError);
  EXPECT_NO_THROW(FreeTreeGenerator(21, 21));
}

TEST(FamilyTest, StarIsTheOnlyTreeWithAlphaNMinusOne) {
  const auto family = enumerate_family({6, 5});
  ASSERT_EQ(family.size(), 1u);
  EXPECT_TRUE(isomorphic(family.front(), star_tree(6)));
}

TEST(FamilyTest, InfeasibleAlphaIsEmpty) {
  EXPECT_TRUE(enumerate_family({6, 2}).empty());
  EXPECT_TRUE(enumerate_family({6, 6}).empty());
}

TEST(FamilyTest, SevenFour) { EXPECT_EQ(enumerate_family({7, 4}).size(), 6u); }

TEST(FamilyTest, FamiliesPartitionAllTrees) {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::size_t total = 0;
    for (std::size_t alpha = 1; alpha <= n; ++alpha) {
      const auto family = enumerate_family({n, alpha});
      if (!alpha_feasible(n, alpha)) {
        EXPECT_TRUE(family.empty());
      }
      for (const Tree& t : family) EXPECT_EQ(independence_number(t), alpha);
      total += family.size();
    }
    EXPECT_EQ(total, kFreeTreeCounts[n - 1]) << "n=" << n;
  }
}

TEST(LevelSequenceTest, BuildsParentsFromDepths) {
  EXPECT_EQ(tree_from_levels({0, 1, 2, 1}), Tree::from_edges(4, {{0, 1}, {1, 2}, {0, 3}}));
  EXPECT_EQ(tree_from_levels({0}), Tree{});
}

}  // namespace
}  // namespace sombor
