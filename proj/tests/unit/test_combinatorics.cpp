#include <gtest/gtest.h>

#include "clonelab/combinatorics/coloring.hpp"
#include "clonelab/combinatorics/independent.hpp"
#include "clonelab/combinatorics/ramsey.hpp"

using namespace clonelab;
using namespace clonelab::combinatorics;

TEST(ColorSet, Algebra) {
  ColorSet a(4, {0, 2});
  EXPECT_EQ(a.count(), 2u);
  EXPECT_EQ(a.complement(), ColorSet(4, {1, 3}));
  EXPECT_EQ((a | a.complement()).count(), 4u);
  EXPECT_TRUE((a & a.complement()).empty());
  EXPECT_TRUE(ColorSet(4, {2}).subset_of(a));
  EXPECT_THROW(a.insert(4), InvalidArgument);
}

TEST(Coloring, Builtins) {
  const auto sum = Coloring::sum_mod(2);
  EXPECT_EQ(sum(1, 3), 0u);
  EXPECT_EQ(sum(1, 2), 1u);
  EXPECT_NO_THROW(audit_symmetry(Coloring::builtin("bit-interleave", 8), 7));
  EXPECT_NO_THROW(audit_symmetry(Coloring::product_mod(5), 7));
  EXPECT_THROW(Coloring::builtin("nope", 2), InvalidArgument);
}

TEST(Coloring, RangeAndSymmetryErrors) {
  const Coloring wild("wild", 2, [](Nat a, Nat) { return static_cast<unsigned>(a); });
  EXPECT_THROW(wild(5, 0), InvalidColoring);
  const Coloring lopsided("lopsided", 2, [](Nat a, Nat b) { return a < b ? 0u : 1u; });
  EXPECT_THROW(lopsided.checked(1, 2), InvalidColoring);
  EXPECT_THROW(audit_symmetry(lopsided, 1), InvalidColoring);
}

TEST(Ramsey, SmallInstances) {
  EXPECT_TRUE(partition_check(6, 3, 2, 2).holds);
  const auto five = partition_check(5, 3, 2, 2);
  EXPECT_FALSE(five.holds);
  ASSERT_TRUE(five.counterexample.has_value());
  EXPECT_EQ(five.counterexample->size(), 10u);
  EXPECT_TRUE(partition_check(3, 2, 1, 2).holds);
}

TEST(Ramsey, BudgetExceeded) { EXPECT_THROW(partition_check(8, 3, 2, 2, 1000), ResourceLimit); }

TEST(AntiRamsey, FindsMonochromaticBlockPair) {
  const auto sum = Coloring::sum_mod(2);
  // Blocks of even numbers: every cross pair has even sum.
  BlockSequence even({{0, 2}, {4, 6}});
  EXPECT_EQ(anti_ramsey_search(sum, even, 0), std::make_pair(std::size_t{0}, std::size_t{1}));
  BlockSequence mixed({{0, 1}, {2, 3}});
  EXPECT_FALSE(anti_ramsey_search(sum, mixed, 0).has_value());
  EXPECT_THROW(BlockSequence({{0, 1}, {1, 2}}), InvalidArgument);
}

TEST(Independent, HausdorffFamily) {
  const auto family = hausdorff_family(3, 4);
  EXPECT_EQ(family.base_size, 1138u);
  EXPECT_EQ(family.sets.size(), 3u);
  EXPECT_TRUE(verify_independent(family, 3));
  EXPECT_EQ(signed_combination_count(3, 3), 27u);
}

TEST(Independent, ComplementaryPairFails) {
  ColorSet a(4, {0, 1});
  const auto family = IndependentFamily::from_sets(4, {a, a.complement()});
  EXPECT_FALSE(verify_independent(family, 2));
  EXPECT_THROW(verify_independent(family, 3), InvalidArgument);
}
