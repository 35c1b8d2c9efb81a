#include <gtest/gtest.h>

#include "clonelab/finite/closure.hpp"

using namespace clonelab;
using namespace clonelab::finite;

namespace {

const Carrier k2{2};
const Carrier k3{3};

OpTable binary(Carrier c, std::vector<Element> t) { return OpTable(c, 2, std::move(t)); }

std::vector<OpTable> unary_ops(Carrier c) { return all_operations(c, 1); }

}  // namespace

TEST(OpTable, ProjectionAndCompose) {
  auto p1 = make_projection(2, 1, k2);
  auto p2 = make_projection(2, 2, k2);
  EXPECT_EQ(p1.table(), (std::vector<Element>{0, 0, 1, 1}));
  EXPECT_EQ(p2.table(), (std::vector<Element>{0, 1, 0, 1}));
  auto nand = binary(k2, {1, 1, 1, 0});
  std::vector<OpTable> args{p1, p1};
  auto neg = compose(nand, args);
  EXPECT_EQ(neg.table(), (std::vector<Element>{1, 1, 0, 0}));
  EXPECT_THROW(OpTable(k2, 2, {0, 1, 2, 0}), InvalidArgument);
  EXPECT_THROW(Carrier(1), InvalidArgument);
}

TEST(OpTable, ComposeSwapHookChangesResult) {
  auto impl = binary(k2, {1, 1, 0, 1});
  std::vector<OpTable> args{make_projection(2, 1, k2), make_projection(2, 2, k2)};
  auto straight = compose(impl, args);
  finite::testing::set_compose_argument_swap(true);
  auto swapped = compose(impl, args);
  finite::testing::set_compose_argument_swap(false);
  EXPECT_EQ(straight, impl);
  EXPECT_NE(straight, swapped);
}

TEST(OpTable, EssentiallyUnary) {
  EXPECT_TRUE(make_projection(3, 2, k3).essentially_unary());
  EXPECT_TRUE(OpTable::constant(k3, 2, 1).essentially_unary());
  EXPECT_FALSE(binary(k2, {0, 1, 1, 0}).essentially_unary());
}

// Slice sizes below are frozen from the brute-force oracle in tests/oracles.
TEST(Closure, BinarySliceSizesCarrier2) {
  std::vector<OpTable> nand{binary(k2, {1, 1, 1, 0})};
  EXPECT_EQ(close_generators(k2, nand, 2, false).slice(2).size(), 16u);

  auto o1 = unary_ops(k2);
  EXPECT_EQ(close_generators(k2, o1, 2, false).slice(2).size(), 6u);

  auto with_xor = o1;
  with_xor.push_back(binary(k2, {0, 1, 1, 0}));
  EXPECT_EQ(close_generators(k2, with_xor, 2, false).slice(2).size(), 8u);

  auto with_and = o1;
  with_and.push_back(binary(k2, {0, 0, 0, 1}));
  EXPECT_EQ(close_generators(k2, with_and, 2, false).slice(2).size(), 16u);
}

TEST(Closure, TernaryGeneratorFeedsBinarySlice) {
  auto maj = OpTable::from_function(k2, 3, [](std::span<const Element> t) {
    return unsigned(t[0] + t[1] + t[2] >= 2);
  });
  std::vector<OpTable> gens{maj};
  auto cs = close_generators(k2, gens, 3, false);
  EXPECT_EQ(cs.slice(2).size(), 2u);
  EXPECT_TRUE(cs.contains(maj));
}

TEST(Closure, IncrementalMatchesBatch) {
  std::vector<OpTable> gens{binary(k3, {0, 0, 0, 0, 1, 1, 0, 1, 2}), OpTable(k3, 1, {1, 2, 0})};
  auto batch = close_generators(k3, gens, 2, false);
  CloneSlices inc(k3, 2);
  inc.absorb(gens[1]);
  inc.absorb(gens[0]);
  EXPECT_EQ(batch.slice(2).elements(), inc.slice(2).elements());
}

TEST(Closure, ResourceLimitIsReported) {
  std::vector<OpTable> nand{binary(k2, {1, 1, 1, 0})};
  EXPECT_THROW(close_generators(k2, nand, 3, false, ClosureLimits{100}), ResourceLimit);
}

TEST(Precomplete, ProjectionsAreNotMaximal) {
  OpSet gens(k2, 2);
  auto v = is_precomplete_bounded(gens, 2, 3);
  EXPECT_EQ(v.kind, PrecompleteKind::not_maximal);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->table(), (std::vector<Element>{0, 0}));
}

TEST(Precomplete, LinearCloneOnTwoElements) {
  std::vector<OpTable> lin{binary(k2, {0, 1, 1, 0}), OpTable(k2, 1, {1, 0}),
                           OpTable::constant(k2, 1, 0)};
  OpSet gens(k2, 2, lin);
  EXPECT_EQ(is_precomplete_bounded(gens, 2, 3).kind, PrecompleteKind::precomplete_evidence);
  std::vector<OpTable> nand{binary(k2, {1, 1, 1, 0})};
  EXPECT_EQ(is_precomplete_bounded(OpSet(k2, 2, nand), 2, 3).kind, PrecompleteKind::improper);
  EXPECT_THROW(is_precomplete_bounded(gens, 2, 2), InvalidArgument);
}

TEST(Closure, ShefferShortcutAgreesWithPlainClosure) {
  auto webb = OpTable::from_function(k3, 2, [](std::span<const Element> t) {
    return (std::max(t[0], t[1]) + 1u) % 3u;
  });
  std::vector<OpTable> gens{webb};
  ClosureLimits plain;
  plain.sheffer_shortcut = false;
  auto a = close_generators(k3, gens, 2, false);
  auto b = close_generators(k3, gens, 2, false, plain);
  EXPECT_TRUE(a.slice(2).full());
  EXPECT_TRUE(b.slice(2).full());
  EXPECT_EQ(a.slice(2).size(), 19683u);

  std::vector<OpTable> min_only{binary(k3, {0, 0, 0, 0, 1, 1, 0, 1, 2})};
  EXPECT_EQ(close_generators(k3, min_only, 2, false).slice(2).size(),
            close_generators(k3, min_only, 2, false, plain).slice(2).size());
}
