#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sombor/canonical.hpp"

namespace sombor {
namespace {

TEST(CanonicalCodeTest, RelabeledPathsAgree) {
  const Tree a = path_tree(4);
  const Tree b = Tree::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
  EXPECT_EQ(canonical_code(a), canonical_code(b));
}

TEST(CanonicalCodeTest, PathAndStarDiffer) {
  EXPECT_NE(canonical_code(path_tree(4)), canonical_code(star_tree(4)));
}

TEST(CanonicalCodeTest, SixteenLabeledTreesOnFourVerticesGiveTwoCodes) {
  std::size_t labeled = 0;
  std::set<CanonicalCode> codes;
  oracle::for_each_labeled_tree(4, [&](const Tree& t) {
    ++labeled;
    codes.insert(canonical_code(t));
  });
  EXPECT_EQ(labeled, 16u);
  EXPECT_EQ(codes.size(), 2u);
}

TEST(CanonicalCodeTest, SeparatesFreeTreeClassesUpToEight) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(oracle::prufer_free_tree_codes(n).size(), expected[n - 1]) << "n=" << n;
  }
}

TEST(CanonicalCodeTest, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree t = oracle::random_tree(1 + trial % 30, rng);
    const CanonicalCode code = canonical_code(t);
    for (int k = 0; k < 10; ++k) EXPECT_EQ(canonical_code(oracle::random_relabel(t, rng)), code);
  }
}

TEST(CanonicalCodeTest, BicentralTreesUseTheSmallerRooting) {
  // Two different rootings of a bicentral tree, in both label orders.
  const Tree t = Tree::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  const Tree u = Tree::from_edges(5, {{3, 4}, {2, 4}, {1, 4}, {0, 1}});
  EXPECT_EQ(tree_centers(t), (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(canonical_code(t), canonical_code(u));
  EXPECT_EQ(canonical_code(t).code, std::min(rooted_code(t, 0), rooted_code(t, 3)));
  EXPECT_NE(rooted_code(t, 0), rooted_code(t, 3));
}

TEST(CanonicalCodeTest, CentersOfSmallTrees) {
  EXPECT_EQ(tree_centers(Tree{}), (std::vector<Vertex>{0}));
  EXPECT_EQ(tree_centers(path_tree(2)), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(tree_centers(path_tree(5)), (std::vector<Vertex>{2}));
  EXPECT_EQ(tree_centers(path_tree(6)), (std::vector<Vertex>{2, 3}));
}

}  // namespace
}  // namespace sombor
