#include <gtest/gtest.h>

#include "clonelab/canonical/canonical.hpp"
#include "clonelab/symbolic/constructions.hpp"

using namespace clonelab;
using namespace clonelab::canonical;
using Kind = CanonicalClassification::Kind;

namespace {

const SymbolicFn kParity = SymbolicFn::binary("parity", [](Nat x, Nat y) { return (x + y) % 2; });

std::vector<Nat> geometric_sample() {
  std::vector<Nat> s;
  for (Nat v = 1; v <= (Nat{1} << 14); v *= 4) s.push_back(v);
  return s;
}

std::vector<Nat> range(Nat lo, Nat hi) {
  std::vector<Nat> s;
  for (Nat v = lo; v < hi; ++v) s.push_back(v);
  return s;
}

}  // namespace

TEST(Pattern, Similarity) {
  EXPECT_TRUE(similar({1, 3, 2, 4}, {0, 5, 1, 9}));
  EXPECT_TRUE(similar({1, 3, 2, 4}, {1, 3, 2, 4}));
  EXPECT_FALSE(similar({1, 2, 3, 4}, {4, 3, 2, 1}));
  EXPECT_THROW(tuple_pattern({1, 1, 2, 3}), InvalidArgument);
  EXPECT_EQ(admissible_patterns().size(), 52u);
}

TEST(Canonical, Check) {
  EXPECT_TRUE(is_canonical(symbolic::max_fn(), range(0, 10)).canonical);
  const auto parity = is_canonical(kParity, range(0, 10));
  ASSERT_FALSE(parity.canonical);
  EXPECT_TRUE(similar(parity.violation->first, parity.violation->second));
  EXPECT_TRUE(is_canonical(symbolic::constant_fn(2, 4), range(0, 10)).canonical);
  EXPECT_TRUE(is_canonical(symbolic::std_pairing(), geometric_sample()).canonical);
}

TEST(Canonical, GreedySubset) {
  EXPECT_EQ(canonical_subset(symbolic::max_fn(), Box(0, 12)), range(0, 12));
  EXPECT_EQ(canonical_subset(kParity, Box(0, 16)), (std::vector<Nat>{0, 1, 2}));
  EXPECT_EQ(canonical_subset(symbolic::std_pairing(), Box(0, 24)), (std::vector<Nat>{0, 1, 2, 3}));
  EXPECT_EQ(canonical_subset(kParity, Box(7, 8)), (std::vector<Nat>{7}));
  const auto sub = canonical_subset(kParity, Box(0, 16));
  EXPECT_TRUE(is_canonical(kParity, sub).canonical);
}

TEST(Canonical, ClassificationTable) {
  const auto s = geometric_sample();
  const auto pr = symbolic::std_pairing();
  struct Row {
    SymbolicFn f;
    Kind delta;
    Kind nabla;
  };
  const std::vector<Row> rows{
      {symbolic::max_fn(), Kind::first_coordinate, Kind::second_coordinate},
      {symbolic::min_fn(), Kind::second_coordinate, Kind::first_coordinate},
      {pr, Kind::injective_on_region, Kind::injective_on_region},
      {symbolic::pr_delta(pr), Kind::injective_on_region, Kind::constant_on_region},
      {symbolic::constant_fn(2, 7), Kind::constant_on_region, Kind::constant_on_region},
      {symbolic::projection_fn(2, 1), Kind::first_coordinate, Kind::first_coordinate},
      {symbolic::projection_fn(2, 2), Kind::second_coordinate, Kind::second_coordinate},
  };
  for (const auto& row : rows) {
    const auto d = classify_on_region(row.f, Region::delta, s);
    const auto n = classify_on_region(row.f, Region::nabla, s);
    EXPECT_EQ(d.kind, row.delta) << row.f.name();
    EXPECT_EQ(n.kind, row.nabla) << row.f.name();
    for (Nat a : s) {
      for (Nat b : s) {
        if (a > b && d.predict(a, b)) EXPECT_EQ(*d.predict(a, b), row.f(a, b));
        if (a < b && n.predict(a, b)) EXPECT_EQ(*n.predict(a, b), row.f(a, b));
      }
    }
  }
  EXPECT_EQ(classify_on_region(symbolic::pr_delta(pr), Region::nabla, s).value, 0u);
  EXPECT_THROW(classify_on_region(kParity, Region::delta, range(0, 8)), NotCanonical);
  EXPECT_TRUE(classify_on_region(symbolic::max_fn(), Region::delta, {1, 2}).degenerate);
}

TEST(Canonical, DeltaNablaInteraction) {
  const auto pr = symbolic::std_pairing();
  const auto sym = SymbolicFn::binary("pr_sym", [pr](Nat x, Nat y) { return pr(std::min(x, y), std::max(x, y)); });
  EXPECT_EQ(delta_nabla_interaction(sym, Box(0, 32)).verdict, Interaction::symmetric);
  EXPECT_EQ(delta_nabla_interaction(pr, Box(0, 32)).verdict, Interaction::disjoint_ranges);
  EXPECT_EQ(delta_nabla_interaction(symbolic::max_fn(), Box(0, 32)).verdict, Interaction::neither_precondition);
  EXPECT_EQ(delta_nabla_interaction(symbolic::pr_delta(pr), Box(0, 32)).verdict, Interaction::disjoint_ranges);
  // Injective on Δ but sharing values with ∇: not canonical, so the lemma does not apply.
  const auto odd = SymbolicFn::binary("odd", [](Nat x, Nat y) { return x > y ? x * 100 + y : y * 100 + x + 1; });
  EXPECT_EQ(delta_nabla_interaction(odd, Box(0, 8)).verdict, Interaction::overlapping);
}

TEST(Canonical, UDeltaAndHeavySubterm) {
  auto reg = symbolic::Registry::standard();
  auto t = [&](const std::string& s) { return terms::parse_term(s, reg); };
  const Box box(0, 16);
  auto m = u_delta_membership(t("(u:succ x)"), box);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.side, 'x');
  m = u_delta_membership(t("(b:max x y)"), box);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.side, 'x');
  EXPECT_EQ(u_nabla_membership(t("(b:max x y)"), box).side, 'y');
  m = u_delta_membership(t("(b:pr x y)"), box);
  EXPECT_FALSE(m.member);
  EXPECT_TRUE(m.x_witness && m.y_witness);
  EXPECT_EQ(u_delta_membership(t("5"), box).side, 'x');

  auto heavy = minimal_heavy_subterm(t("(b:pr x y)"), box);
  ASSERT_TRUE(heavy.has_value());
  EXPECT_TRUE(heavy->path.empty());
  EXPECT_FALSE(minimal_heavy_subterm(t("(u:succ (u:double x))"), box).has_value());
  heavy = minimal_heavy_subterm(t("(u:succ (b:pr x y))"), box);
  ASSERT_TRUE(heavy.has_value());
  EXPECT_EQ(heavy->path, (std::vector<unsigned>{0}));
  heavy = minimal_heavy_subterm(t("(b:max (b:pr_delta x y) y)"), box);
  ASSERT_TRUE(heavy.has_value());
  EXPECT_EQ(heavy->failed_region, Region::delta);
}
