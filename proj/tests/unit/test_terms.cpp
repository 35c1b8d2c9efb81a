#include <gtest/gtest.h>

#include "clonelab/symbolic/constructions.hpp"
#include "clonelab/terms/partial_eval.hpp"
#include "clonelab/terms/search.hpp"

using namespace clonelab;
using namespace clonelab::terms;
using combinatorics::ColorSet;
using combinatorics::Coloring;
using symbolic::Box;

namespace {

struct Fixture {
  Coloring c = Coloring::sum_mod(8);
  SymbolicFn pr = symbolic::std_pairing();
  SymbolicFn fa = symbolic::f_A(ColorSet(8, {0, 1, 2}), c, pr).renamed("F_A");
  SymbolicFn fb = symbolic::f_A(ColorSet(8, {1, 2, 3}), c, pr).renamed("F_B");
  symbolic::Registry reg = [this] {
    auto r = symbolic::Registry::standard();
    r.add(fa);
    r.add(fb);
    return r;
  }();
  Term parse(const std::string& s) const { return parse_term(s, reg); }
};

}  // namespace

TEST(Term, ParseEvalRoundTrip) {
  Fixture fx;
  const Term t = fx.parse("(b:F_A (u:succ x) (b:max y 3))");
  EXPECT_EQ(to_string(t), "(b:F_A (u:succ x) (b:max y 3))");
  EXPECT_EQ(t.depth(), 2u);
  EXPECT_EQ(eval(t, 5, 1), fx.fa(6, 3));
  EXPECT_EQ(eval(fx.parse("x"), 5, 9), 5u);
  EXPECT_EQ(eval(fx.parse("(u:succ 3)"), 0, 0), 4u);
  EXPECT_EQ(eval(fx.parse("(b:F_A x y)"), 1, 3), fx.fa(1, 3));
}

TEST(Term, ParseErrors) {
  Fixture fx;
  EXPECT_THROW(fx.parse("(u:max x)"), ParseError);
  EXPECT_THROW(fx.parse("(b:nope x y)"), ParseError);
  EXPECT_THROW(fx.parse("(b:max x)"), ParseError);
  EXPECT_THROW(fx.parse("(b:max x y z)"), ParseError);
  EXPECT_THROW(fx.parse("z"), ParseError);
  EXPECT_THROW(fx.parse("x y"), ParseError);
  EXPECT_THROW(parse_term_list("x\n(u:succ\n", fx.reg), ParseError);
  EXPECT_EQ(parse_term_list("x # comment\n\n y\n", fx.reg).size(), 2u);
}

TEST(Subset, Enumeration) {
  EXPECT_EQ(SubsetSpec::arithmetic(3, 4).first(3), (std::vector<Nat>{3, 7, 11}));
  const auto odd = SubsetSpec::filter(SubsetSpec::naturals(), "odd", [](Nat v) { return v % 2 == 1; });
  EXPECT_TRUE(odd.contains(9));
  EXPECT_FALSE(odd.contains(8));
  const auto never = SubsetSpec::filter(SubsetSpec::naturals(), "none", [](Nat) { return false; });
  EXPECT_THROW(never.first(1), Inconclusive);
}

TEST(PartialEval, Cases) {
  Fixture fx;
  const auto s = SubsetSpec::naturals(1);
  EXPECT_EQ(partial_eval(fx.parse("x"), s, 32).kind, PartialKind::unary_x);
  EXPECT_EQ(partial_eval(fx.parse("x"), s, 32).rule, "1");
  const auto two = partial_eval(fx.parse("(u:succ 4)"), s, 32);
  EXPECT_EQ(two.kind, PartialKind::constant);
  EXPECT_EQ(two.constant, 5u);
  EXPECT_EQ(two.rule, "2");
  const auto crucial = partial_eval(fx.parse("(b:F_B (u:succ x) (u:double y))"), s, 32);
  EXPECT_EQ(crucial.kind, PartialKind::constant);
  EXPECT_EQ(crucial.constant, 0u);
  EXPECT_EQ(crucial.rule, "7");
  EXPECT_TRUE(crucial.uses_crucial_case);
  EXPECT_EQ(partial_eval(fx.parse("(b:F_B y x)"), s, 32).rule, "7'");
  const auto three = partial_eval(fx.parse("(u:succ (u:double y))"), s, 32);
  EXPECT_EQ(three.kind, PartialKind::unary_y);
  EXPECT_EQ(three.rule, "3y");
  EXPECT_EQ(three.at(0, 10), 21u);
  const auto zero = partial_eval(fx.parse("(u:zero x)"), s, 32);
  EXPECT_EQ(zero.kind, PartialKind::constant);
  EXPECT_EQ(partial_eval(fx.parse("(b:F_B 3 5)"), s, 32).rule, "4");
  const auto six = partial_eval(fx.parse("(b:F_B x x)"), s, 32);
  EXPECT_EQ(six.kind, PartialKind::unary_x);
  EXPECT_EQ(six.rule, "6x");
  EXPECT_EQ(partial_eval(fx.parse("(b:max (u:succ y) y)"), s, 32).rule, "6y");
  const auto undefined_half = partial_eval(fx.parse("(u:half x)"), SubsetSpec::naturals(), 32);
  EXPECT_FALSE(undefined_half.defined());
  ASSERT_TRUE(undefined_half.blocking.has_value());
  const auto mixed = partial_eval(fx.parse("(b:max x y)"), s, 32);
  EXPECT_FALSE(mixed.defined());
  EXPECT_FALSE(mixed.blocking.has_value());
  EXPECT_THROW(partial_eval(fx.parse("(u:succ x)"), s, 1), InvalidArgument);
}

TEST(PartialEval, FiveAndMirror) {
  Fixture fx;
  // 0 is a fixed argument of F: F(f x, 0) = f x.
  const auto s = SubsetSpec::naturals(1);
  const auto left = partial_eval(fx.parse("(b:F_B (u:succ x) 0)"), s, 32);
  EXPECT_EQ(left.rule, "5x");
  EXPECT_EQ(left.kind, PartialKind::unary_x);
  const auto right = partial_eval(fx.parse("(b:F_B 0 (u:succ y))"), s, 32);
  EXPECT_EQ(right.rule, "5y'");
  EXPECT_EQ(right.kind, PartialKind::unary_y);
}

TEST(Thinning, HalfBecomesInjectiveOnEvens) {
  Fixture fx;
  const auto t = fx.parse("(u:half x)");
  const auto thinned = thin_for({t}, SubsetSpec::naturals(), 64);
  EXPECT_EQ(thinned.first(5), (std::vector<Nat>{0, 2, 4, 6, 8}));
  EXPECT_TRUE(partial_eval(t, thinned, 64).defined());
  const auto plain = thin_for({fx.parse("x"), fx.parse("(u:zero y)")}, SubsetSpec::naturals(), 64);
  EXPECT_EQ(plain.first(4), SubsetSpec::naturals().first(4));
  EXPECT_THROW(thin_for({fx.parse("(b:max x y)")}, SubsetSpec::naturals(), 64), Inconclusive);
}

TEST(Thinning, CaseFiveNeedsThinning) {
  Fixture fx;
  // F_B(x, 5) is 0, max or pr depending on the color of (x, 5).
  const auto t = fx.parse("(b:F_B x 5)");
  const auto s = SubsetSpec::naturals(1);
  EXPECT_FALSE(partial_eval(t, s, 64).defined());
  const auto thinned = thin_for({t}, s, 64);
  const auto r = partial_eval(t, thinned, 64);
  ASSERT_TRUE(r.defined());
  for (Nat a : thinned.first(64)) {
    for (Nat b : thinned.first(8)) EXPECT_EQ(eval(t, a, b), r.at(a, b));
  }
}

TEST(Thinning, MainLemmaStages) {
  Fixture fx;
  const std::vector<UnaryMap> family{UnaryMap::identity(), {"succ", [](Nat v) { return v + 1; }}};
  const auto s = main_lemma_thinning(SubsetSpec::naturals(1), family, {2}, fx.pr);
  const auto members = s.first(24);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      const Nat a = members[i], b = members[j];
      for (const auto& f : family) {
        EXPECT_NE(f(a), fx.pr(a, b));
        EXPECT_NE(f(b), fx.pr(a, b));
        for (const auto& g : family) EXPECT_NE(f(a), g(b));
      }
      EXPECT_NE(fx.pr(a, b), 2u);
    }
  }
}

TEST(Agreement, ConstantColorings) {
  Fixture fx;
  const auto c0 = Coloring::constant(8, 0);  // 0 ∉ B
  const auto fb = symbolic::f_A(ColorSet(8, {1, 2, 3}), c0, fx.pr).renamed("F_B");
  const auto t = Term::binary(fb, Term::unary(fx.reg.lookup("succ"), Term::x()), Term::y());
  const auto s = SubsetSpec::naturals(1);
  const auto found = find_agreement(t, s, c0, 0, 20);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->alpha, 1u);
  EXPECT_EQ(found->beta, 3u);
  EXPECT_TRUE(verify_agreement(t, partial_eval(t, s, 64), *found, c0, 0));
  EXPECT_FALSE(find_agreement(t, s, Coloring::constant(8, 1), 0, 20).has_value());
  const auto k = Term::constant(5);
  const auto at_k = find_agreement(k, s, fx.c, 0, 20);
  ASSERT_TRUE(at_k.has_value());
  EXPECT_EQ(at_k->alpha, 1u);
  EXPECT_EQ(at_k->beta, 7u);
  EXPECT_THROW(find_agreement(fx.parse("(b:max x y)"), s, fx.c, 0, 20), InvalidArgument);
}

TEST(Search, FindsFactTargetAndProjection) {
  Fixture fx;
  const ColorSet a(8, {0, 1, 2, 3, 4});
  const ColorSet b(8, {4, 5, 6, 7});
  const auto fa = symbolic::f_A(a, fx.c, fx.pr).renamed("F_A");
  const auto fb = symbolic::f_A(b, fx.c, fx.pr).renamed("F_B");
  const auto target = symbolic::fact_many_pairing(a, b, fx.c, fx.pr);
  SearchOptions opt;
  opt.max_depth = 2;
  const auto r = bounded_term_search(target, {fa, fb}, Box(1, 40), opt);
  ASSERT_TRUE(r.found.has_value());
  EXPECT_EQ(to_string(*r.found), "(b:F_A (b:F_A x y) (b:F_B x y))");
  const auto proj = bounded_term_search(symbolic::projection_fn(2, 1), {fa}, Box(1, 40), opt);
  ASSERT_TRUE(proj.found.has_value());
  EXPECT_EQ(to_string(*proj.found), "x");
  opt.max_depth = kMaxSearchDepth + 1;
  EXPECT_THROW(bounded_term_search(target, {fa}, Box(1, 4), opt), InvalidArgument);
}

TEST(Search, MainLemmaEvidence) {
  Fixture fx;
  SearchOptions opt;
  opt.max_depth = 3;
  opt.unary_library = {fx.reg.lookup("id"), fx.reg.lookup("succ")};
  const auto r = bounded_term_search(fx.fa, {fx.fb}, Box(1, 40), opt);
  EXPECT_FALSE(r.found.has_value());
  EXPECT_EQ(r.depth_reached, 3u);
  EXPECT_EQ(r.frontier_sizes.size(), 4u);
}
