#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "battery.hpp"
#include "clonelab/canonical/canonical.hpp"
#include "clonelab/combinatorics/independent.hpp"
#include "clonelab/combinatorics/ramsey.hpp"
#include "clonelab/finite/chain.hpp"
#include "clonelab/finite/closure.hpp"
#include "clonelab/finite/ideal.hpp"
#include "clonelab/finite/text_format.hpp"
#include "clonelab/symbolic/constructions.hpp"
#include "clonelab/symbolic/properties.hpp"
#include "clonelab/symbolic/registry.hpp"
#include "clonelab/terms/partial_eval.hpp"

namespace clonelab::cli {

using combinatorics::ColorSet;
using combinatorics::Coloring;
using finite::Carrier;
using finite::OpTable;
using symbolic::SymbolicFn;

namespace {

std::string read_file(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string("missing ") + flag);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report header(const std::string& experiment, Report parameters) {
  Report r;
  r["experiment"] = experiment;
  r["parameters"] = std::move(parameters);
  return r;
}

std::vector<OpTable> load_ops(const Options& o, Report& names) {
  std::vector<OpTable> ops;
  names = Report::array();
  for (auto& named : finite::parse_ops(read_file(o.gens, "--gens"))) {
    names.push_back(named.name);
    ops.push_back(std::move(named.op));
  }
  if (ops.empty()) throw UsageError("no operations in " + o.gens);
  return ops;
}

Report sizes_json(const finite::CloneSlices& s) {
  Report sizes = Report::array();
  for (unsigned n = 1; n <= s.arity_cap(); ++n) sizes.push_back(s.slice(n).size());
  return sizes;
}

/// Parses "NAME=1,2,3" into a registered F_NAME.
void register_sets(const Options& o, const Coloring& c, symbolic::Registry& reg, Report& out) {
  const auto pr = symbolic::std_pairing();
  for (const auto& spec : o.sets) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects NAME=c1,c2,...");
    ColorSet s(o.mu);
    std::stringstream list(spec.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      if (item.empty()) continue;
      const unsigned long v = std::stoul(item);
      if (v >= o.mu) throw UsageError("color " + item + " outside 0.." + std::to_string(o.mu - 1));
      s.insert(v);
    }
    const std::string name = "F_" + spec.substr(0, eq);
    reg.add(symbolic::f_A(s, c, pr).renamed(name));
    out[name] = s.to_string();
  }
}

}  // namespace

Outcome run_closure(const Options& o) {
  Report names;
  const auto ops = load_ops(o, names);
  const auto slices = finite::close_generators(ops.front().carrier(), ops, o.cap, o.all_unary);
  Outcome out{header("closure", {{"gens", names}, {"cap", o.cap}, {"all_unary", o.all_unary}})};
  out.report["slice_sizes"] = sizes_json(slices);
  out.report["basis_size"] = slices.basis().size();
  return out;
}

Outcome run_pol(const Options& o) {
  std::vector<finite::NamedRelation> rels = finite::parse_relations(read_file(o.rels, "--rels"));
  if (rels.empty()) throw UsageError("no relations in " + o.rels);
  Outcome out{header("pol", {{"rels", o.rels}, {"cap", o.cap}})};
  Report rows = Report::array();
  for (const auto& nr : rels) {
    const auto p = finite::pol(nr.relation, o.cap);
    Report sizes = Report::array();
    for (unsigned n = 1; n <= o.cap; ++n) sizes.push_back(p.slice_size(n));
    rows.push_back({{"relation", nr.name}, {"width", nr.relation.width()}, {"slice_sizes", sizes}});
  }
  out.report["polymorphisms"] = rows;
  return out;
}

Outcome run_ci(const Options& o) {
  if (o.excluded >= o.carrier) throw UsageError("--excluded must lie in the carrier");
  const finite::PrincipalIdeal ideal(Carrier(o.carrier), static_cast<finite::Element>(o.excluded));
  Outcome out{header("ci", {{"carrier", o.carrier}, {"excluded_point", o.excluded}, {"cap", o.cap}})};
  Report sizes = Report::array();
  for (unsigned n = 1; n <= o.cap; ++n) sizes.push_back(finite::ci_operations(ideal, n).size());
  out.report["ci_sizes_up_to_arity"] = sizes;
  const bool rec = finite::reconstruct_ideal(ideal);
  out.report["reconstructed"] = rec;
  if (!rec) out.status = refuted;
  if (!o.gens.empty()) {
    Report names;
    const auto ops = load_ops(o, names);
    Report members = Report::array();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      members.push_back({{"op", names[i]}, {"in_ci", finite::ci_membership(ops[i], ideal)}});
    }
    out.report["membership"] = members;
  }
  return out;
}

Outcome run_precomplete(const Options& o) {
  Report names;
  const auto ops = load_ops(o, names);
  const finite::OpSet gens(ops.front().carrier(), o.cap, ops);
  const auto v = finite::is_precomplete_bounded(gens, o.cap, o.working_cap);
  Outcome out{header("precomplete", {{"gens", names}, {"cap", o.cap}, {"working_cap", o.working_cap}})};
  out.report["verdict"] = v.kind_name();
  out.report["candidates_checked"] = v.candidates_checked;
  if (v.witness) out.report["witness"] = v.witness->to_string();
  return out;
}

Outcome run_chain(const Options& o) {
  const auto rep = finite::unary_interval_chain(Carrier(o.carrier), o.cap, o.working_cap);
  Outcome out{header("chain", {{"carrier", o.carrier}, {"cap", o.cap}, {"working_cap", o.working_cap}})};
  out.report["candidates"] = rep.candidates;
  out.report["orbit_representatives"] = rep.orbit_representatives;
  out.report["clone_count"] = rep.clones.size();
  out.report["chain"] = rep.is_chain;
  Report clones = Report::array();
  for (const auto& c : rep.clones) clones.push_back({{"slice_sizes", c.slice_sizes}, {"basis_size", c.slices.basis().size()}});
  out.report["clones"] = clones;
  return out;
}

Outcome run_pairing(const Options& o) {
  const auto box = symbolic::parse_box(o.box);
  const symbolic::Box square(box.lo, box.hi);
  const auto pr = symbolic::std_pairing();
  const std::string kind = o.kind.empty() ? "pr" : o.kind;
  Outcome out{header("pairing", {{"kind", kind}, {"box", box.to_string()}})};
  SymbolicFn f = pr;
  if (kind == "pr") {
  } else if (kind == "pr_delta") {
    f = symbolic::pr_delta(pr);
  } else if (kind == "dr") {
    f = symbolic::dr_pairing(symbolic::dr_boundary_h(), pr, square);
  } else if (kind == "hh-sym") {
    const auto base = SymbolicFn::binary("F", [pr](Nat x, Nat y) {
      return std::max(x, y) + 1 + pr(std::min(x, y), std::max(x, y));
    });
    f = symbolic::hh_pairing_symmetric(base, square);
  } else if (kind == "hh-asym") {
    const auto pd = symbolic::pr_delta(pr);
    const auto t = SymbolicFn::binary("pr_delta_t", [pd](Nat x, Nat y) { return pd(y, x); });
    f = symbolic::hh_pairing_asymmetric(t, symbolic::h_standard(), square);
  } else {
    throw UsageError("unknown pairing kind '" + kind + "' (pr, pr_delta, dr, hh-sym, hh-asym)");
  }
  const auto hit = symbolic::check_injective_on(f, box);
  out.report["function"] = f.name();
  out.report["injective"] = !hit;
  if (hit) {
    out.report["collision"] = {{hit->first.first, hit->first.second}, {hit->second.first, hit->second.second}, hit->value};
    out.status = refuted;
  }
  return out;
}

Outcome run_terms(const Options& o) {
  const Coloring c = Coloring::builtin(o.coloring, o.mu);
  auto reg = symbolic::Registry::standard();
  Report sets = Report::object();
  register_sets(o, c, reg, sets);
  const auto list = terms::parse_term_list(read_file(o.file, "--file"), reg);
  Outcome out{header("terms", {{"file", o.file}, {"coloring", c.name()}, {"mu", o.mu}, {"sets", sets},
                               {"budget", o.budget}, {"c0", o.c0}})};
  const terms::SubsetSpec naturals = terms::SubsetSpec::naturals(1);
  std::optional<terms::SubsetSpec> joint;
  try {
    joint = terms::thin_for(list, naturals, o.budget);
    out.report["subset"] = joint->name();
  } catch (const Inconclusive& e) {
    out.report["joint_thinning"] = e.what();
  }
  Report rows = Report::array();
  for (const auto& t : list) {
    Report row{{"term", terms::to_string(t)}};
    terms::SubsetSpec s = naturals;
    if (joint) {
      s = *joint;
    } else {
      try {
        s = terms::thin_for({t}, naturals, o.budget);
      } catch (const Inconclusive&) {
      }
      row["subset"] = s.name();
    }
    const auto r = terms::partial_eval(t, s, o.budget);
    row["result"] = r.describe();
    row["rule"] = r.rule;
    const auto a = r.defined() ? terms::find_agreement(t, s, c, o.c0, 48, o.budget) : std::nullopt;
    if (a) {
      const bool good = terms::verify_agreement(t, r, *a, c, o.c0);
      row["agreement"] = {{"alpha", a->alpha}, {"beta", a->beta}, {"verified", good}};
      if (!good) out.status = refuted;
    }
    rows.push_back(row);
  }
  out.report["results"] = rows;
  return out;
}

Outcome run_canonical(const Options& o) {
  const auto reg = symbolic::Registry::standard();
  const std::string name = o.fn.empty() ? "pr" : o.fn;
  const auto& f = reg.lookup(name, 2);
  const auto box = symbolic::parse_box(o.box);
  Outcome out{header("canonical", {{"function", name}, {"box", box.to_string()}})};
  const auto subset = canonical::canonical_subset(f, symbolic::Box(box.lo, box.hi));
  out.report["canonical_subset"] = subset;
  Report cls = Report::object();
  for (auto region : {symbolic::Region::delta, symbolic::Region::nabla}) {
    try {
      const auto k = canonical::classify_on_region(f, region, subset);
      cls[symbolic::to_string(region)] = canonical::to_string(k.kind);
    } catch (const canonical::NotCanonical& e) {
      cls[symbolic::to_string(region)] = std::string("not canonical: ") + e.what();
    } catch (const InvalidArgument& e) {
      cls[symbolic::to_string(region)] = std::string("undecided: ") + e.what();
    }
  }
  out.report["classification"] = cls;
  out.report["interaction"] = canonical::to_string(canonical::delta_nabla_interaction(f, symbolic::Box(box.lo, box.hi)).verdict);
  return out;
}

Outcome run_ramsey(const Options& o) {
  const auto res = combinatorics::partition_check(o.n, o.m, o.r, o.c, o.budget > 64 ? o.budget : std::uint64_t{1} << 26);
  Outcome out{header("ramsey", {{"n", o.n}, {"m", o.m}, {"r", o.r}, {"c", o.c}})};
  out.report["verdict"] = res.holds;
  out.report["colorings_checked"] = res.colorings_checked;
  if (res.counterexample) out.report["counterexample"] = *res.counterexample;
  return out;
}

Outcome run_prtest(const Options& o) {
  const Coloring c = Coloring::builtin(o.coloring, o.mu);
  if (o.block_size == 0) throw UsageError("--block-size must be positive");
  std::vector<std::vector<Nat>> blocks;
  Nat next = 1;
  for (unsigned b = 0; b < o.blocks; ++b) {
    std::vector<Nat> block;
    for (unsigned i = 0; i < o.block_size; ++i) block.push_back(next++);
    blocks.push_back(block);
  }
  const auto hit = combinatorics::anti_ramsey_search(c, combinatorics::BlockSequence(blocks), o.c0);
  Outcome out{header("prtest", {{"coloring", c.name()}, {"mu", o.mu}, {"block_size", o.block_size},
                                {"blocks", o.blocks}, {"c0", o.c0}})};
  out.report["found"] = hit.has_value();
  if (hit) out.report["pair"] = {hit->first, hit->second};
  out.report["note"] = "Pr-witness: assumed, not certified";
  std::cerr << "Pr-witness: assumed, not certified\n";
  return out;
}

Outcome run_indep(const Options& o) {
  const auto fam = combinatorics::hausdorff_family(o.m, o.q, 3, o.width);
  const bool v = combinatorics::verify_independent(fam, o.width);
  Outcome out{header("indep", {{"m", o.m}, {"q", o.q}, {"width", o.width}})};
  out.report["base_size"] = fam.base_size;
  out.report["signed_combinations"] = combinatorics::signed_combination_count(fam.sets.size(), o.width);
  out.report["independent"] = v;
  if (!v) out.status = refuted;
  return out;
}

Outcome run_suite(const Options& o) {
  battery::Config cfg;
  cfg.scale = battery::parse_scale(o.suite);
  cfg.seed = o.seed;
  Outcome out{header("suite", {{"suite", battery::to_string(cfg.scale)}, {"seed", cfg.seed}})};
  Report rows = Report::array();
  Report timing = Report::object();
  for (const auto& r : battery::run_all(cfg, {})) {
    rows.push_back({{"id", r.id}, {"title", r.title}, {"verdict", r.verdict}, {"time_limit_s", r.time_limit},
                    {"detail", r.detail}});
    timing[std::to_string(r.id)] = r.seconds;
    if (!r.passed()) out.status = refuted;
    std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.id << ' ' << r.title << '\n';
  }
  out.report["criteria"] = rows;
  out.report["all_passed"] = out.status == ok;
  out.report["timing"] = {{"criterion_seconds", timing}};
  return out;
}

}  // namespace clonelab::cli
