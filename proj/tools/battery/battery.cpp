#include "battery.hpp"

#include <chrono>
#include <random>
#include <set>

#include "clonelab/canonical/canonical.hpp"
#include "clonelab/combinatorics/independent.hpp"
#include "clonelab/combinatorics/ramsey.hpp"
#include "clonelab/finite/chain.hpp"
#include "clonelab/finite/closure.hpp"
#include "clonelab/finite/ideal.hpp"
#include "clonelab/symbolic/constructions.hpp"
#include "clonelab/symbolic/properties.hpp"
#include "clonelab/terms/partial_eval.hpp"
#include "clonelab/terms/search.hpp"

namespace clonelab::battery {

using json = nlohmann::ordered_json;
using combinatorics::ColorSet;
using combinatorics::Coloring;
using finite::Carrier;
using finite::Element;
using finite::OpTable;
using symbolic::Box;
using symbolic::Region;
using symbolic::SymbolicFn;

Scale parse_scale(const std::string& name) {
  if (name == "fast") return Scale::fast;
  if (name == "acceptance") return Scale::acceptance;
  if (name == "full") return Scale::full;
  throw InvalidArgument("unknown suite '" + name + "'");
}

std::string to_string(Scale scale) {
  switch (scale) {
    case Scale::fast:
      return "fast";
    case Scale::acceptance:
      return "acceptance";
    case Scale::full:
      return "full";
  }
  return "acceptance";
}

namespace {

std::size_t scaled(const Config& cfg, std::size_t fast, std::size_t acceptance, std::size_t full) {
  switch (cfg.scale) {
    case Scale::fast:
      return fast;
    case Scale::acceptance:
      return acceptance;
    case Scale::full:
      return full;
  }
  return acceptance;
}

OpTable random_op(Carrier k, unsigned arity, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> value(0, k.size() - 1);
  std::vector<Element> table(finite::tuple_count(k.size(), arity));
  for (auto& e : table) e = static_cast<Element>(value(rng));
  return OpTable(k, arity, std::move(table));
}

OpTable random_outside(const finite::PrincipalIdeal& ideal, unsigned arity, std::mt19937_64& rng) {
  while (true) {
    OpTable f = random_op(ideal.carrier(), arity, rng);
    if (!finite::ci_membership(f, ideal)) return f;
  }
}

json pair_json(std::pair<Nat, Nat> p) { return json::array({p.first, p.second}); }

// 1. The interval [O^(1), O] on a two-element carrier.
bool unary_chain(const Config&, json& d) {
  const auto report = finite::unary_interval_chain(Carrier(2), 2, 3);
  d["carrier"] = 2;
  d["cap"] = 2;
  d["working_cap"] = 3;
  d["clone_count"] = report.clones.size();
  d["chain"] = report.is_chain;
  json sizes = json::array();
  for (const auto& c : report.clones) sizes.push_back(c.slice_sizes);
  d["slice_sizes"] = sizes;
  return report.clones.size() == 3 && report.is_chain;
}

// 2. Every f outside C_I regenerates everything.
bool ci_precomplete(const Config& cfg, json& d) {
  using clock = std::chrono::steady_clock;
  auto within = [](clock::time_point start, double limit) {
    return std::chrono::duration<double>(clock::now() - start).count() <= limit;
  };
  bool ok = true;
  {
    const auto start = clock::now();
    const finite::PrincipalIdeal ideal(Carrier(2), 1);
    const auto ops = finite::ci_operations(ideal, 2);
    const auto base = finite::close_generators(Carrier(2), ops, 3, false);
    std::size_t checked = 0, regenerated = 0;
    for (unsigned arity : {1u, 2u}) {
      for (const auto& f : finite::all_operations(Carrier(2), arity)) {
        if (finite::ci_membership(f, ideal)) continue;
        ++checked;
        if (finite::regenerates_all(base, f, 3)) ++regenerated;
      }
    }
    d["carrier2"] = {{"excluded_point", 1},
                     {"base_ternary_slice", base.slice(3).size()},
                     {"candidates", checked},
                     {"regenerated_all_256", regenerated},
                     {"within_60s", within(start, 60)}};
    ok = ok && d["carrier2"]["within_60s"].get<bool>() && checked > 0 && checked == regenerated && !base.slice(3).full();
  }
  {
    const auto start = clock::now();
    const finite::PrincipalIdeal ideal(Carrier(3), 2);
    const auto ops = finite::ci_operations(ideal, 2);
    const auto base = finite::close_generators(Carrier(3), ops, 2, false);
    std::mt19937_64 rng(cfg.seed);
    const std::size_t samples = scaled(cfg, 10, 100, 200);
    std::size_t regenerated = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const OpTable f = random_outside(ideal, 1 + static_cast<unsigned>(rng() % 2), rng);
      if (finite::regenerates_all(base, f, 2)) ++regenerated;
    }
    d["carrier3"] = {{"excluded_point", 2},
                     {"base_binary_slice", base.slice(2).size()},
                     {"sampled", samples},
                     {"regenerated_binary_slice", regenerated},
                     {"within_600s", within(start, 600)}};
    ok = ok && d["carrier3"]["within_600s"].get<bool>() && regenerated == samples && !base.slice(2).full();
  }
  return ok;
}

// 3. g = H(χ, g0, g1) pointwise.
bool decomposition(const Config& cfg, json& d) {
  bool ok = true;
  {
    const finite::PrincipalIdeal ideal(Carrier(2), 1);
    const OpTable neg(Carrier(2), 1, {1, 0});
    std::size_t identities = 0, total = 0;
    for (const auto& g : finite::all_operations(Carrier(2), 2)) {
      ++total;
      const auto cert = finite::decompose_via_witness(g, neg, ideal, finite::DecompositionMode::adapted);
      if (cert.identity && cert.valid()) ++identities;
    }
    d["carrier2"] = {{"mode", "adapted"}, {"g_checked", total}, {"identity_holds", identities}};
    ok = ok && total == 16 && identities == total;
  }
  {
    const finite::PrincipalIdeal ideal(Carrier(3), 2);
    std::mt19937_64 rng(cfg.seed + 3);
    const std::size_t samples = scaled(cfg, 20, 100, 300);
    std::size_t identities = 0, degenerate = 0;
    for (std::size_t i = 0; i < samples;) {
      const OpTable g = random_op(Carrier(3), 2, rng);
      const OpTable f = random_outside(ideal, 2, rng);
      try {
        const auto cert = finite::decompose_via_witness(g, f, ideal, finite::DecompositionMode::standard);
        if (cert.identity && cert.g0_factorization && cert.h_conservative) ++identities;
        ++i;
      } catch (const DegenerateWitness&) {
        ++degenerate;
      }
    }
    d["carrier3"] = {{"mode", "standard"}, {"pairs", samples}, {"identity_holds", identities}, {"degenerate_skipped", degenerate}};
    ok = ok && identities == samples;
  }
  return ok;
}

// 4. The ideal is recovered from C_I.
bool reconstruction(const Config&, json& d) {
  bool ok = true;
  json rows = json::array();
  for (unsigned k : {2u, 3u}) {
    for (unsigned a = 0; a < k; ++a) {
      const bool r = finite::reconstruct_ideal(finite::PrincipalIdeal(Carrier(k), static_cast<Element>(a)));
      rows.push_back({{"carrier", k}, {"excluded_point", a}, {"reconstructed", r}});
      ok = ok && r;
    }
  }
  d["cases"] = rows;
  return ok;
}

// 5. pr' = F_A(F_A, F_B) agrees with pr.
bool fact_identity(const Config& cfg, json& d) {
  const auto pr = symbolic::std_pairing();
  std::mt19937_64 rng(cfg.seed + 5);
  const std::size_t per_coloring = scaled(cfg, 2, 10, 20);
  std::size_t covers = 0, agreeing = 0;
  for (const char* name : {"sum-mod", "bit-interleave"}) {
    const Coloring c = Coloring::builtin(name, 8);
    combinatorics::audit_symmetry(c, cfg.seed);
    for (std::size_t i = 0; i < per_coloring; ++i) {
      ColorSet a(8), b(8);
      for (unsigned col = 0; col < 8; ++col) {
        const auto pick = rng() % 3;
        if (pick != 1) a.insert(col);
        if (pick != 0) b.insert(col);
      }
      const auto p = symbolic::fact_many_pairing(a, b, c, pr);
      bool same = true;
      for (Nat x = 1; x < 64 && same; ++x) {
        for (Nat y = 1; y < 64; ++y) {
          if (x != y && p(x, y) != pr(x, y)) {
            same = false;
            break;
          }
        }
      }
      ++covers;
      if (same) ++agreeing;
    }
  }
  d["mu"] = 8;
  d["box"] = "1..64:offdiag";
  d["covers"] = covers;
  d["agreeing"] = agreeing;
  return covers == agreeing;
}

// 6. The three pairing constructions are injective off the diagonal.
bool pairing_constructions(const Config& cfg, json& d) {
  const Nat side = scaled(cfg, 64, 128, 192);
  const Box box(0, side);
  const Box off(0, side, Region::offdiag);
  const auto pr = symbolic::std_pairing();
  bool ok = true;
  auto record = [&](const std::string& key, const SymbolicFn& fn) {
    const auto hit = symbolic::check_injective_on(fn, off);
    d[key] = hit ? json{{"injective", false}, {"collision", {pair_json(hit->first), pair_json(hit->second)}}}
                 : json{{"injective", true}};
    ok = ok && !hit;
  };
  record("dr_pairing", symbolic::dr_pairing(symbolic::dr_boundary_h(), pr, box));
  const auto f = SymbolicFn::binary("F", [pr](Nat x, Nat y) {
    return std::max(x, y) + 1 + pr(std::min(x, y), std::max(x, y));
  });
  record("hh_symmetric", symbolic::hh_pairing_symmetric(f, box));
  const auto pd = symbolic::pr_delta(pr);
  const auto transpose = SymbolicFn::binary("pr_delta_t", [pd](Nat x, Nat y) { return pd(y, x); });
  record("hh_asymmetric", symbolic::hh_pairing_asymmetric(transpose, symbolic::h_standard(), box));
  d["box"] = off.to_string();
  return ok;
}

struct TermWorld {
  Coloring c = Coloring::sum_mod(8);
  SymbolicFn pr = symbolic::std_pairing();
  SymbolicFn fb = symbolic::f_A(ColorSet(8, {1, 2, 3}), c, pr).renamed("F_B");
  SymbolicFn fc = symbolic::f_A(ColorSet(8, {4, 5}), c, pr).renamed("F_C");
  symbolic::Registry reg = [this] {
    auto r = symbolic::Registry::standard();
    r.add(fb);
    r.add(fc);
    return r;
  }();
};

std::vector<std::string> term_corpus() {
  std::vector<std::string> corpus{
      "x", "y", "7", "(u:succ x)", "(u:double (u:succ y))", "(u:half x)", "(u:zero y)", "(u:succ 4)",
      "(b:max x 0)", "(b:min y y)", "(b:max x y)", "(b:min (u:succ x) y)", "(b:max (u:double x) (u:succ x))",
      "(b:F_B (b:F_B x y) (b:F_C y x))", "(u:succ (b:F_B x (u:succ y)))", "(b:F_C (b:max x 0) (u:half y))",
  };
  const std::vector<std::string> atoms{"x", "y", "(u:succ x)", "(u:double y)", "3", "(u:half x)"};
  for (const auto& a : atoms) {
    for (const auto& b : atoms) corpus.push_back("(b:F_B " + a + " " + b + ")");
  }
  return corpus;
}

// 7. Partial evaluation matches the trichotomy; agreement pairs satisfy both conjuncts.
bool partial_evaluator(const Config&, json& d) {
  const TermWorld w;
  const unsigned c0 = 0;
  const std::size_t budget = 64;
  const auto corpus = term_corpus();
  std::map<std::string, std::size_t> shapes;
  std::size_t violations = 0, agreements = 0, verified = 0, thinned = 0;
  json failures = json::array();
  for (const auto& text : corpus) {
    const terms::Term t = terms::parse_term(text, w.reg);
    terms::SubsetSpec s = terms::SubsetSpec::naturals(1);
    try {
      s = terms::thin_for({t}, s, budget);
      if (s.name() != "N>=1") ++thinned;
    } catch (const Inconclusive&) {
    }
    const auto r = terms::partial_eval(t, s, budget);
    ++shapes[terms::to_string(r.kind)];
    if (!r.defined()) continue;
    const auto sample = s.first(budget);
    if (r.kind != terms::PartialKind::constant) {
      std::set<Nat> images;
      for (Nat a : sample) images.insert(r.map(a));
      if (images.size() != sample.size()) {
        ++violations;
        failures.push_back({{"term", text}, {"problem", "unary map not 1-1 on the sample"}});
      }
    }
    if (!r.uses_crucial_case) {
      bool sound = true;
      for (std::size_t i = 0; i < 24 && sound; ++i) {
        for (std::size_t j = 0; j < 24; ++j) {
          if (terms::eval(t, sample[i], sample[j]) != r.at(sample[i], sample[j])) {
            sound = false;
            break;
          }
        }
      }
      if (!sound) {
        ++violations;
        failures.push_back({{"term", text}, {"problem", "prediction differs from evaluation"}});
      }
    }
    const auto found = terms::find_agreement(t, s, w.c, c0, 48, budget);
    if (found) {
      ++agreements;
      if (terms::verify_agreement(t, r, *found, w.c, c0)) {
        ++verified;
      } else {
        failures.push_back({{"term", text}, {"problem", "agreement pair fails re-verification"}});
      }
    }
  }
  d["corpus_size"] = corpus.size();
  d["shapes"] = shapes;
  d["thinned"] = thinned;
  d["agreement_pairs"] = agreements;
  d["agreement_verified"] = verified;
  d["failures"] = failures;
  return corpus.size() >= 50 && violations == 0 && agreements > 0 && agreements == verified;
}

// 8. Bounded search: F_A is out of reach of F_B, the pairing identity is found.
bool main_lemma_search(const Config& cfg, json& d) {
  const Coloring c = Coloring::sum_mod(8);
  const auto pr = symbolic::std_pairing();
  const Box box(1, 40);
  const auto reg = symbolic::Registry::standard();
  terms::SearchOptions opt;
  opt.max_depth = static_cast<unsigned>(scaled(cfg, 3, 3, 4));
  opt.unary_library = {reg.lookup("id"), reg.lookup("succ")};
  const ColorSet a(8, {0, 1, 2, 3});
  const ColorSet b(8, {2, 3, 4, 5});
  const auto fa = symbolic::f_A(a, c, pr).renamed("F_A");
  const auto fb = symbolic::f_A(b, c, pr).renamed("F_B");
  const auto miss = terms::bounded_term_search(fa, {fb}, box, opt);
  d["refutation"] = {{"A", a.to_string()},
                     {"B", b.to_string()},
                     {"max_depth", opt.max_depth},
                     {"found", miss.found ? json(terms::to_string(*miss.found)) : json(nullptr)},
                     {"frontier_sizes", miss.frontier_sizes},
                     {"candidates_evaluated", miss.candidates_evaluated}};
  const ColorSet cover(8, {3, 4, 5, 6, 7});
  const auto fcover = symbolic::f_A(cover, c, pr).renamed("F_B'");
  const auto target = symbolic::fact_many_pairing(a, cover, c, pr);
  terms::SearchOptions two = opt;
  two.max_depth = 2;
  const auto hit = terms::bounded_term_search(target, {fa, fcover}, box, two);
  d["fact_target"] = {{"found", hit.found ? json(terms::to_string(*hit.found)) : json(nullptr)},
                      {"depth", hit.found ? hit.found->depth() : 0}};
  return !miss.found && hit.found && hit.found->depth() == 2;
}

// 9. Canonical classification table and the Δ/∇ interaction.
bool canonicalization(const Config&, json& d) {
  using Kind = canonical::CanonicalClassification::Kind;
  std::vector<Nat> sample;
  for (Nat v = 1; v <= (Nat{1} << 14); v *= 4) sample.push_back(v);
  const auto pr = symbolic::std_pairing();
  const auto pd = symbolic::pr_delta(pr);
  struct Row {
    SymbolicFn f;
    Kind delta;
    Kind nabla;
  };
  const std::vector<Row> rows{
      {symbolic::max_fn(), Kind::first_coordinate, Kind::second_coordinate},
      {symbolic::min_fn(), Kind::second_coordinate, Kind::first_coordinate},
      {pr, Kind::injective_on_region, Kind::injective_on_region},
      {pd, Kind::injective_on_region, Kind::constant_on_region},
      {symbolic::constant_fn(2, 7), Kind::constant_on_region, Kind::constant_on_region},
      {symbolic::projection_fn(2, 1), Kind::first_coordinate, Kind::first_coordinate},
      {symbolic::projection_fn(2, 2), Kind::second_coordinate, Kind::second_coordinate},
  };
  bool ok = true;
  json table = json::array();
  for (const auto& row : rows) {
    const auto dc = canonical::classify_on_region(row.f, Region::delta, sample);
    const auto nc = canonical::classify_on_region(row.f, Region::nabla, sample);
    const bool match = dc.kind == row.delta && nc.kind == row.nabla;
    table.push_back({{"function", row.f.name()},
                     {"delta", canonical::to_string(dc.kind)},
                     {"nabla", canonical::to_string(nc.kind)},
                     {"sample_size", sample.size()},
                     {"matches", match}});
    ok = ok && match;
  }
  d["classification"] = table;

  const Box box(0, 32);
  const std::vector<SymbolicFn> fixtures{
      pr, pd, SymbolicFn::binary("pr_sym", [pr](Nat x, Nat y) { return pr(std::min(x, y), std::max(x, y)); }),
      SymbolicFn::binary("pr_delta_t", [pd](Nat x, Nat y) { return pd(y, x); }),
      SymbolicFn::binary("pr_t", [pr](Nat x, Nat y) { return pr(y, x); })};
  json inter = json::array();
  for (const auto& f : fixtures) {
    const auto r = canonical::delta_nabla_interaction(f, box);
    const bool good = r.verdict == canonical::Interaction::symmetric || r.verdict == canonical::Interaction::disjoint_ranges;
    inter.push_back({{"function", f.name()}, {"verdict", canonical::to_string(r.verdict)}});
    ok = ok && good;
  }
  d["interaction"] = inter;
  d["interaction_box"] = box.to_string();
  return ok;
}

// 10. Finite partition relations.
bool ramsey(const Config&, json& d) {
  const auto six = combinatorics::partition_check(6, 3, 2, 2);
  const auto five = combinatorics::partition_check(5, 3, 2, 2);
  d["6->(3)^2_2"] = six.holds;
  d["5->(3)^2_2"] = five.holds;
  if (five.counterexample) d["pentagon_coloring"] = *five.counterexample;
  return six.holds && !five.holds;
}

// A random binary function with a checked almost-unary witness on coordinate k.
SymbolicFn random_witnessed(std::mt19937_64& rng, std::size_t index) {
  const unsigned k = 1 + static_cast<unsigned>(rng() % 2);
  const Nat scale = 1 + rng() % 4;
  const Nat offset = 1 + rng() % 7;
  const Nat salt = rng();
  const std::string name = "g" + std::to_string(index);
  SymbolicFn g = SymbolicFn::binary(name, [k, scale, offset, salt](Nat x, Nat y) {
    const Nat u = k == 1 ? x : y;
    const Nat v = k == 1 ? y : x;
    const Nat mix = (v * 0x9e3779b97f4a7c15ull) ^ salt;
    return scale * u + (mix >> 7) % (u + offset);
  });
  g.with_witness(symbolic::AlmostUnaryWitness::from_bound(
      k, [scale, offset](Nat u) { return scale * u + u + offset - 1; }, name + " <= (s+1)u + o - 1"));
  return g;
}

// 11. The almost-unary calculus at box scale.
bool almost_unary(const Config& cfg, json& d) {
  const auto pr = symbolic::std_pairing();
  const auto pd = symbolic::pr_delta(pr);
  const Box box(0, 64);
  const auto pd_verdict = symbolic::almost_unary_check(pd, pd.witness(), box);
  const auto max_verdict = symbolic::almost_unary_check(symbolic::max_fn(), std::nullopt, box);
  d["pr_delta_with_witness"] = symbolic::to_string(pd_verdict.kind);
  d["max_without_witness"] = symbolic::to_string(max_verdict.kind);

  std::mt19937_64 rng(cfg.seed + 11);
  const std::size_t triples = scaled(cfg, 10, 50, 100);
  std::size_t passed = 0;
  for (std::size_t i = 0; i < triples; ++i) {
    const auto g1 = random_witnessed(rng, 3 * i);
    const auto g2 = random_witnessed(rng, 3 * i + 1);
    const auto g3 = random_witnessed(rng, 3 * i + 2);
    bool args_ok = true;
    for (const auto* g : {&g1, &g2, &g3}) {
      args_ok = args_ok && symbolic::almost_unary_check(*g, g->witness(), box).passed();
    }
    const auto m = symbolic::med_of_witnessed(g1, g2, g3);
    if (args_ok && symbolic::almost_unary_check(m, m.witness(), box).passed()) ++passed;
  }
  d["med_triples"] = triples;
  d["med_passed"] = passed;

  const Box sg_box(0, 32);
  auto sets_json = [](const symbolic::SgEstimate& e) {
    json out = json::array();
    for (const auto& s : e.sets) out.push_back(s);
    return out;
  };
  const auto sg_min = symbolic::s_g_estimate(symbolic::min_fn(), sg_box, sg_box.width());
  const auto sg_pr = symbolic::s_g_estimate(pr, sg_box, sg_box.width());
  d["s_g_min"] = {{"sets", sets_json(sg_min)}, {"pairwise_intersecting", sg_min.pairwise_intersecting}};
  d["s_g_pr"] = {{"sets", sets_json(sg_pr)}, {"pairwise_intersecting", sg_pr.pairwise_intersecting}};
  d["s_g_box"] = sg_box.to_string();

  const bool min_ok = sg_min.sets == std::vector<std::set<unsigned>>{{1, 2}} && sg_min.pairwise_intersecting;
  auto has = [&](const std::set<unsigned>& s) {
    return std::find(sg_pr.sets.begin(), sg_pr.sets.end(), s) != sg_pr.sets.end();
  };
  const bool pr_ok = has({1}) && has({2}) && !sg_pr.pairwise_intersecting;
  return pd_verdict.kind == symbolic::AlmostUnaryKind::verified_witness &&
         max_verdict.kind == symbolic::AlmostUnaryKind::not_almost_unary_on_box && passed == triples && min_ok && pr_ok;
}

// 12. Hausdorff independence.
bool independence(const Config&, json& d) {
  const auto family = combinatorics::hausdorff_family(3, 4);
  const bool indep = combinatorics::verify_independent(family, 3);
  const ColorSet a(4, {0, 1});
  const auto pair = combinatorics::IndependentFamily::from_sets(4, {a, a.complement()});
  const bool pair_indep = combinatorics::verify_independent(pair, 2);
  d["hausdorff"] = {{"m", 3}, {"q", 4}, {"base_size", family.base_size}, {"independent_width_3", indep}};
  d["complementary_pair_independent"] = pair_indep;
  return indep && !pair_indep;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "unary-interval chain", 10, unary_chain},
      {2, "C_I precompleteness evidence", 660, ci_precomplete},
      {3, "decomposition identity", 30, decomposition},
      {4, "ideal reconstruction", 5, reconstruction},
      {5, "pairing identity pr' = pr", 10, fact_identity},
      {6, "pairing constructions injective", 30, pairing_constructions},
      {7, "partial evaluator conformance", 60, partial_evaluator},
      {8, "bounded term search", 300, main_lemma_search},
      {9, "canonicalization", 10, canonicalization},
      {10, "Ramsey instances", 60, ramsey},
      {11, "almost-unary calculus", 60, almost_unary},
      {12, "independence", 5, independence},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const Config& config) {
  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.time_limit = c.time_limit;
  r.detail = json::object();
  const auto start = std::chrono::steady_clock::now();
  try {
    r.verdict = c.run(config, r.detail);
  } catch (const std::exception& e) {
    r.verdict = false;
    r.detail["error"] = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const Config& config, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    out.push_back(run_criterion(c, config));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace clonelab::battery
