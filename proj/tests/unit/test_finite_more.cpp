#include <gtest/gtest.h>

#include <random>

#include "clonelab/finite/chain.hpp"
#include "clonelab/finite/ideal.hpp"
#include "clonelab/finite/relation.hpp"
#include "clonelab/finite/text_format.hpp"

using namespace clonelab;
using namespace clonelab::finite;

namespace {
const Carrier k2{2};
const Carrier k3{3};

OpTable binary(Carrier c, std::vector<Element> t) { return OpTable(c, 2, std::move(t)); }
}  // namespace

TEST(Relation, RespectsExamples) {
  auto order = RelationTable(k2, 2, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_TRUE(respects(binary(k2, {0, 0, 0, 1}), order));
  const std::vector<Element> zero{0};
  EXPECT_FALSE(respects(OpTable(k2, 1, {1, 0}), RelationTable::unary(k2, zero)));
  EXPECT_TRUE(respects(binary(k2, {1, 0, 0, 1}), RelationTable::full(k2, 3)));
}

TEST(Relation, PolCounts) {
  const std::vector<Element> low{0, 1};
  EXPECT_EQ(pol(RelationTable::unary(k3, low), 1).size(), 12u);
  const std::vector<Element> zero{0};
  EXPECT_EQ(pol(RelationTable::unary(k2, zero), 2).slice_size(2), 8u);
  EXPECT_EQ(pol(RelationTable::full(k2, 2), 2).size(), 4u + 16u);
}

TEST(Relation, PolRecoversCloneSlice) {
  // The linear clone on two elements: Pol of its binary slice, read as a relation of
  // width 4, gives the slice back.
  std::vector<OpTable> gens{binary(k2, {0, 1, 1, 0}), OpTable(k2, 1, {1, 0})};
  auto cs = close_generators(k2, gens, 2, false);
  auto slice = cs.slice(2).elements();
  auto r = RelationTable::from_slice(k2, 2, slice);
  auto p = pol(r, 2);
  EXPECT_EQ(p.slice(2), slice);
  for (const auto& op : slice) EXPECT_TRUE(respects(op, r));
}

TEST(Ideal, MembershipExamples) {
  PrincipalIdeal ideal(k3, 2);
  auto max = OpTable::from_function(k3, 2, [](auto t) { return unsigned(std::max(t[0], t[1])); });
  auto sum = OpTable::from_function(k3, 2, [](auto t) { return (t[0] + t[1]) % 3u; });
  EXPECT_TRUE(ci_membership(max, ideal));
  EXPECT_FALSE(ci_membership(OpTable::constant(k3, 2, 2), ideal));
  EXPECT_FALSE(ci_membership(sum, ideal));
}

TEST(Ideal, MembershipPathsAgree) {
  for (unsigned a = 0; a < 3; ++a) {
    PrincipalIdeal ideal(k3, static_cast<Element>(a));
    const std::vector<Element> rest = ideal.largest_small_set();
    auto rel = RelationTable::unary(k3, rest);
    for (const auto& f : all_operations(k3, 2)) {
      const bool fast = ci_membership(f, ideal);
      ASSERT_EQ(fast, respects(f, rel));
      if (f.at(0) % 7 == 0) ASSERT_EQ(fast, ci_membership_by_definition(f, ideal));
    }
  }
}

TEST(Ideal, DecompositionCarrier2AllBinary) {
  PrincipalIdeal ideal(k2, 1);
  OpTable neg(k2, 1, {1, 0});
  EXPECT_THROW(decompose_via_witness(binary(k2, {0, 0, 0, 0}), neg, ideal), DegenerateWitness);
  for (const auto& g : all_operations(k2, 2)) {
    auto cert = decompose_via_witness(g, neg, ideal, DecompositionMode::adapted);
    EXPECT_TRUE(cert.valid()) << g.to_string();
    EXPECT_TRUE(cert.identity);
  }
}

TEST(Ideal, DecompositionDegenerateOnConstant) {
  PrincipalIdeal ideal(k3, 2);
  auto g = binary(k3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  EXPECT_THROW(decompose_via_witness(g, OpTable::constant(k3, 2, 2), ideal), DegenerateWitness);
  auto adapted = decompose_via_witness(g, OpTable::constant(k3, 2, 2), ideal,
                                       DecompositionMode::adapted);
  EXPECT_TRUE(adapted.valid());
  EXPECT_THROW(decompose_via_witness(g, OpTable::constant(k3, 2, 0), ideal), InvalidArgument);
}

TEST(Ideal, DecompositionRandomCarrier3) {
  PrincipalIdeal ideal(k3, 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned> value(0, 2);
  int checked = 0;
  while (checked < 50) {
    std::vector<Element> ft(9), gt(9);
    for (auto& v : ft) v = static_cast<Element>(value(rng));
    for (auto& v : gt) v = static_cast<Element>(value(rng));
    OpTable f(k3, 2, ft), g(k3, 2, gt);
    if (ci_membership(f, ideal)) continue;
    for (auto mode : {DecompositionMode::standard, DecompositionMode::adapted}) {
      try {
        auto cert = decompose_via_witness(g, f, ideal, mode);
        EXPECT_TRUE(cert.identity);
        EXPECT_TRUE(cert.g0_factorization);
        EXPECT_TRUE(cert.h_conservative);
        if (mode == DecompositionMode::adapted) EXPECT_TRUE(cert.valid());
      } catch (const DegenerateWitness&) {
        EXPECT_EQ(mode, DecompositionMode::standard);
      }
    }
    ++checked;
  }
}

TEST(Ideal, ComposeMutationBreaksIdentity) {
  PrincipalIdeal ideal(k2, 1);
  OpTable neg(k2, 1, {1, 0});
  finite::testing::set_compose_argument_swap(true);
  bool all = true;
  for (const auto& g : all_operations(k2, 2)) {
    all = all && decompose_via_witness(g, neg, ideal, DecompositionMode::adapted).identity;
  }
  finite::testing::set_compose_argument_swap(false);
  EXPECT_FALSE(all);
}

TEST(Ideal, Reconstruction) {
  for (unsigned k : {2u, 3u, 4u}) {
    for (unsigned a = 0; a < k; ++a) {
      EXPECT_TRUE(reconstruct_ideal(PrincipalIdeal(Carrier(k), static_cast<Element>(a))));
    }
  }
  EXPECT_THROW(reconstruct_ideal(PrincipalIdeal(Carrier(5), 0)), ResourceLimit);
}

TEST(Precomplete, ZeroPreservingIsMaximal) {
  PrincipalIdeal ideal(k2, 1);
  auto ops = ci_operations(ideal, 2);
  auto v = is_precomplete_bounded(OpSet(k2, 2, ops), 2, 3);
  EXPECT_EQ(v.kind, PrecompleteKind::precomplete_evidence);
}

TEST(Chain, CarrierTwo) {
  auto report = unary_interval_chain(k2, 2, 3);
  ASSERT_EQ(report.clones.size(), 3u);
  EXPECT_TRUE(report.is_chain);
  EXPECT_EQ(report.clones[0].slice_sizes[1], 6u);
  const auto& middle = report.clones[1].slices;
  EXPECT_TRUE(middle.contains(binary(k2, {0, 1, 1, 0})));
  EXPECT_FALSE(middle.contains(binary(k2, {0, 0, 0, 1})));
  EXPECT_EQ(report.clones[2].slice_sizes[1], 16u);
}

TEST(Chain, CarrierTwoCapThree) {
  auto report = unary_interval_chain(k2, 3, 3);
  EXPECT_EQ(report.clones.size(), 3u);
  EXPECT_TRUE(report.is_chain);
}

TEST(Chain, ResourceLimit) {
  EXPECT_THROW(unary_interval_chain(k3, 3, 4), ResourceLimit);
}

TEST(Chain, OrbitRepresentativeIsInvariant) {
  auto f = binary(k3, {0, 2, 1, 1, 1, 0, 2, 0, 0});
  auto rep = orbit_representative(f);
  auto swapped = OpTable::from_function(k3, 2, [&](auto t) { return unsigned(f({t[1], t[0]})); });
  EXPECT_EQ(orbit_representative(swapped), rep);
  EXPECT_LE(rep, f);
}

TEST(TextFormat, RoundTrip) {
  auto op = binary(k3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  auto text = format_op("plus", op) + "# comment\n" + format_op("neg", OpTable(k2, 1, {1, 0}));
  auto parsed = parse_ops(text);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0].name, "plus");
  EXPECT_EQ(parsed[0].op, op);
  EXPECT_EQ(format_op("plus", parsed[0].op) + "# comment\n" + format_op("neg", parsed[1].op), text);

  auto rel = RelationTable(k2, 2, {{0, 0}, {0, 1}, {1, 1}});
  auto rtext = format_relation("leq", rel);
  auto rparsed = parse_relations(rtext);
  ASSERT_EQ(rparsed.size(), 1u);
  EXPECT_EQ(rparsed[0].relation, rel);
  EXPECT_EQ(format_relation("leq", rparsed[0].relation), rtext);
}

TEST(TextFormat, Errors) {
  EXPECT_THROW(parse_ops("op f carrier=2 arity=2\n0 1 1\n"), ParseError);
  EXPECT_THROW(parse_ops("op f carrier=2 arity=1\n0 2\n"), ParseError);
  EXPECT_THROW(parse_ops("op f carrier=1 arity=1\n0\n"), ParseError);
  EXPECT_THROW(parse_relations("rel r carrier=2 width=2\n0 1 1\n"), ParseError);
}

TEST(Chain, CarrierThreeHasFourClones) {
  auto report = unary_interval_chain(k3, 2, 3);
  ASSERT_EQ(report.clones.size(), 4u);
  EXPECT_TRUE(report.is_chain);
  EXPECT_EQ(report.clones.front().slice_sizes[1], 51u);
  EXPECT_EQ(report.clones.back().slice_sizes[1], 19683u);
}
