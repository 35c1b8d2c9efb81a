#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "clonelab/symbolic/constructions.hpp"
#include "clonelab/symbolic/properties.hpp"

using namespace clonelab;
using namespace clonelab::symbolic;
using combinatorics::ColorSet;
using combinatorics::Coloring;

TEST(Pairing, StandardValues) {
  const auto pr = std_pairing();
  EXPECT_EQ(pr(0, 0), 2u);
  EXPECT_EQ(pr(1, 3), 28u);
  std::unordered_set<Nat> seen;
  for (Nat x = 0; x < 256; ++x) {
    for (Nat y = 0; y < 256; ++y) seen.insert(pr(x, y));
  }
  EXPECT_EQ(seen.size(), 65536u);
  EXPECT_EQ(seen.count(0), 0u);
  EXPECT_THROW(pr(Nat{1} << 40, Nat{1} << 40), OverflowError);
}

TEST(Pairing, Bijection) {
  const auto b = pairing_to_bijection(std_pairing(), Box(0, 32));
  EXPECT_FALSE(check_injective_on(b.bijection, Box(0, 128)).has_value());
  EXPECT_GT(bijection_coverage_side(b.bijection, 100, 256), 0u);
  EXPECT_EQ(b.g1(5) % 2, 0u);
  EXPECT_EQ(b.g2(5) % 2, 1u);
  EXPECT_THROW(pairing_to_bijection(max_fn(), Box(0, 8)), ConstructionRefuted);
}

TEST(Library, SmallFunctions) {
  EXPECT_EQ(med()({1, 2, 3}), 2u);
  const auto pd = pr_delta(std_pairing());
  EXPECT_EQ(pd(3, 3), 0u);
  EXPECT_EQ(pd(2, 5), 0u);
  EXPECT_EQ(pd(5, 2), std_pairing()(5, 2));
  const auto h = h_standard();
  EXPECT_EQ(h(0, 7), 7u);
  EXPECT_EQ(h(7, 1), 7u);
  EXPECT_EQ(h(3, 4), 0u);
}

TEST(FA, ThreeCases) {
  const auto c = Coloring::sum_mod(2);
  const auto pr = std_pairing();
  const auto fa = f_A(ColorSet(2, {0}), c, pr);
  EXPECT_EQ(fa(1, 3), pr(1, 3));
  EXPECT_EQ(fa(1, 2), 0u);
  for (Nat b = 0; b < 20; ++b) {
    EXPECT_EQ(fa(0, b), b);
    EXPECT_EQ(fa(b, 0), b);
    EXPECT_EQ(fa(b, b), b);
  }
  EXPECT_TRUE(fa.annotations().cross_vanishing);
  EXPECT_THROW(f_A(ColorSet(3, {0}), c, pr), InvalidArgument);
  const Coloring lopsided("lopsided", 2, [](Nat a, Nat b) { return a < b ? 0u : 1u; });
  EXPECT_THROW(f_A(ColorSet(2, {0}), lopsided, pr)(1, 2), InvalidColoring);
}

TEST(FactManyPairing, AgreesWithPr) {
  const auto pr = std_pairing();
  std::mt19937_64 rng(11);
  for (const char* name : {"sum-mod", "bit-interleave"}) {
    const auto c = Coloring::builtin(name, 8);
    for (int trial = 0; trial < 10; ++trial) {
      ColorSet a(8), b(8);
      for (unsigned i = 0; i < 8; ++i) {
        switch (rng() % 3) {
          case 0: a.insert(i); break;
          case 1: b.insert(i); break;
          default: a.insert(i); b.insert(i);
        }
      }
      const auto p = fact_many_pairing(a, b, c, pr);
      for (Nat x = 1; x < 64; ++x) {
        for (Nat y = 1; y < 64; ++y) {
          if (x != y) ASSERT_EQ(p(x, y), pr(x, y)) << name << " " << x << "," << y;
        }
      }
      EXPECT_EQ(p(0, 9), 9u);
    }
  }
  EXPECT_THROW(fact_many_pairing(ColorSet(2, {0}), ColorSet(2, {0}), Coloring::sum_mod(2), pr),
               InvalidArgument);
}

TEST(DaviesRosenberg, InjectiveAndBoundary) {
  const auto pr = std_pairing();
  const auto dr = dr_pairing(dr_boundary_h(), pr, Box(0, 64));
  EXPECT_FALSE(check_injective_on(dr, Box(0, 200, Region::offdiag)).has_value());
  EXPECT_EQ(dr(4, 4), dr(9, 9));
  EXPECT_EQ(dr(7, 3), dr_p1(pr(7, 3)));
  EXPECT_THROW(dr_pairing(h_standard(), pr, Box(0, 8)), InvalidH);
}

TEST(HhPairing, Symmetric) {
  const auto pr = std_pairing();
  const auto f = SymbolicFn::binary("F", [pr](Nat x, Nat y) {
    return std::max(x, y) + 1 + pr(std::min(x, y), std::max(x, y));
  });
  const auto p = hh_pairing_symmetric(f, Box(0, 128));
  EXPECT_FALSE(check_injective_on(p, Box(0, 128, Region::offdiag)).has_value());
  EXPECT_THROW(hh_pairing_symmetric(max_fn(), Box(0, 8)), ConstructionRefuted);
  EXPECT_NO_THROW(hh_pairing_symmetric(max_fn(), Box(0, 1)));
}

TEST(HhPairing, Asymmetric) {
  const auto pr = std_pairing();
  const auto pd = pr_delta(pr);
  const auto transpose = SymbolicFn::binary("pr_delta_t", [pd](Nat x, Nat y) { return pd(y, x); });
  const auto h = h_standard();
  const auto p = hh_pairing_asymmetric(transpose, h, Box(0, 100));
  EXPECT_FALSE(check_injective_on(p, Box(0, 100, Region::offdiag)).has_value());
  EXPECT_EQ(p(9, 2), 2 * transpose(2, 9) + 3);
  EXPECT_THROW(hh_pairing_asymmetric(max_fn(), h, Box(0, 8)), ConstructionRefuted);
}

TEST(FamilyGenerators, ComplementsOutsideJ) {
  const auto family = combinatorics::hausdorff_family(3, 4);
  const Coloring c("mod_base", static_cast<unsigned>(family.base_size),
                   [n = family.base_size](Nat a, Nat b) { return static_cast<unsigned>((a + b) % n); });
  const auto gens = clone_family_generators(family, {true, false, true}, c, std_pairing());
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_FALSE(gens[0].complemented);
  EXPECT_TRUE(gens[1].complemented);
  EXPECT_EQ(gens[1].set, family.sets[1].complement());
  const auto all = clone_family_generators(family, {true, true, true}, c, std_pairing());
  for (const auto& g : all) EXPECT_FALSE(g.complemented);
  const auto p = fact_many_pairing(family.sets[1], family.sets[1].complement(), c, std_pairing());
  for (Nat x = 1; x < 20; ++x) {
    for (Nat y = 1; y < 20; ++y) {
      if (x != y) EXPECT_EQ(p(x, y), std_pairing()(x, y));
    }
  }
}

TEST(Injectivity, Counterexamples) {
  EXPECT_FALSE(check_injective_on(std_pairing(), Box(0, 64)).has_value());
  const auto off = check_injective_on(max_fn(), Box(0, 8, Region::offdiag));
  ASSERT_TRUE(off.has_value());
  EXPECT_EQ(off->first, std::make_pair(Nat{0}, Nat{1}));
  EXPECT_EQ(off->second, std::make_pair(Nat{1}, Nat{0}));
  const auto nabla = check_injective_on(max_fn(), Box(0, 8, Region::nabla));
  ASSERT_TRUE(nabla.has_value());
  EXPECT_EQ(nabla->first, std::make_pair(Nat{0}, Nat{2}));
  EXPECT_EQ(nabla->second, std::make_pair(Nat{1}, Nat{2}));
  EXPECT_FALSE(check_injective_on(max_fn(), Box(3, 3)).has_value());
}

TEST(AlmostUnary, WitnessAndCensus) {
  const auto mn = min_fn();
  EXPECT_EQ(almost_unary_check(mn, mn.witness(), Box(0, 64)).kind, AlmostUnaryKind::verified_witness);
  const auto pd = pr_delta(std_pairing());
  EXPECT_EQ(almost_unary_check(pd, pd.witness(), Box(0, 64)).kind, AlmostUnaryKind::verified_witness);
  EXPECT_EQ(almost_unary_check(max_fn(), std::nullopt, Box(0, 64)).kind,
            AlmostUnaryKind::not_almost_unary_on_box);
  EXPECT_EQ(almost_unary_check(mn, std::nullopt, Box(0, 64)).kind, AlmostUnaryKind::almost_unary_on_box);
  const auto bad = AlmostUnaryWitness::from_bound(1, [](Nat x) { return x; }, "max <= x");
  const auto v = almost_unary_check(max_fn(), bad, Box(0, 8));
  EXPECT_EQ(v.kind, AlmostUnaryKind::witness_refuted);
  EXPECT_EQ(v.counterexample, (std::vector<Nat>{0, 1}));
}

TEST(AlmostUnary, MedOfWitnessedArguments) {
  const auto pd = pr_delta(std_pairing());
  const auto swapped = SymbolicFn::binary("pd_t", [pd](Nat x, Nat y) { return pd(y, x); })
                           .with_witness(AlmostUnaryWitness::from_bound(
                               2, [pd](Nat y) { return pd.witness()->bound(y); }, "transpose"));
  const auto m = med_of_witnessed(min_fn(), swapped, pd);
  ASSERT_TRUE(m.witness().has_value());
  EXPECT_EQ(almost_unary_check(m, m.witness(), Box(0, 64)).kind, AlmostUnaryKind::verified_witness);
  EXPECT_THROW(med_of_witnessed(max_fn(), pd, pd), InvalidArgument);
}

TEST(Heavy, DependsHeavily) {
  const auto pd = pr_delta(std_pairing());
  EXPECT_TRUE(depends_heavily(max_fn(), 1, Box(0, 32)));
  EXPECT_TRUE(depends_heavily(pd, 1, Box(0, 32)));
  EXPECT_FALSE(depends_heavily(pd, 2, Box(0, 32)));
  EXPECT_FALSE(depends_heavily(constant_fn(2, 5), 1, Box(0, 32)));
}

TEST(Heavy, SgEstimate) {
  const auto pr_est = s_g_estimate(std_pairing(), Box(0, 32), 32);
  EXPECT_EQ(pr_est.sets.size(), 3u);
  EXPECT_FALSE(pr_est.pairwise_intersecting);
  const auto min_est = s_g_estimate(min_fn(), Box(0, 32), 32);
  ASSERT_EQ(min_est.sets.size(), 1u);
  EXPECT_EQ(min_est.sets[0], (std::set<unsigned>{1, 2}));
  EXPECT_TRUE(min_est.pairwise_intersecting);
  EXPECT_TRUE(s_g_estimate(constant_fn(2, 0), Box(0, 32), 32).sets.empty());
  EXPECT_THROW(s_g_estimate(min_fn(), Box(0, 4), 5), InvalidArgument);
}

TEST(Spread, Witnesses) {
  SpreadWitness q{SpreadWitness::Kind::q_style, [](Nat x) { return std::vector<Nat>{x}; }, std::nullopt};
  EXPECT_EQ(witnessed_spread_check(max_fn(), q, Box(0, 16)).kind, SpreadKind::verified);
  const auto plus = SymbolicFn::binary("plus", [](Nat x, Nat y) { return x + y; });
  const auto v = witnessed_spread_check(plus, q, Box(0, 16));
  EXPECT_EQ(v.kind, SpreadKind::refuted);
  EXPECT_EQ(v.tuple, (std::vector<Nat>{1, 1}));
  SpreadWitness p{SpreadWitness::Kind::p_style, [](Nat x) { return std::vector<Nat>{x, x + 1}; }, Nat{2}};
  EXPECT_EQ(witnessed_spread_check(max_fn(), p, Box(0, 4)).kind, SpreadKind::bound_refuted);
}

TEST(BoxSyntax, Parse) {
  const auto b = parse_box("3..10:nabla");
  EXPECT_EQ(b.lo, 3u);
  EXPECT_EQ(b.hi, 10u);
  EXPECT_EQ(b.region, Region::nabla);
  EXPECT_EQ(parse_box("0..4").region, Region::full);
  EXPECT_THROW(parse_box("4..2"), ParseError);
  EXPECT_THROW(parse_box("0..4:up"), ParseError);
}
