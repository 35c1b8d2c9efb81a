#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "clonelab/finite/op_table.hpp"
#include "commands.hpp"

using namespace clonelab;
using namespace clonelab::cli;

namespace {

int emit(Outcome& out, const std::string& path, double seconds) {
  // Everything except this field is reproducible from the parameters and seed.
  if (!out.report.contains("timing")) out.report["timing"] = Report::object();
  out.report["timing"]["total_seconds"] = seconds;
  out.report["exit_status"] = out.status;
  const std::string text = out.report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << '\n';
      return usage;
    }
    f << text;
  }
  return out.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clonelab: bounded experiments on clones, pairings and term classes"};
  app.require_subcommand(1);
  Options o;
  std::string out_path;
  bool swap_compose = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--carrier", o.carrier, "carrier size k");
    sub->add_option("--cap", o.cap, "arity cap");
    sub->add_option("--working-cap", o.working_cap, "working arity cap");
    sub->add_option("--box", o.box, "box lo..hi:(delta|nabla|offdiag|full)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--budget", o.budget, "probe or enumeration budget");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_flag("--mutate-compose-swap", swap_compose)->group("");
  };

  std::map<CLI::App*, std::function<Outcome(const Options&)>> handlers;
  auto add = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = fn;
    return sub;
  };

  auto* closure = add("closure", "close a generator file up to the arity cap", run_closure);
  closure->add_option("--gens", o.gens, "operation file")->required();
  closure->add_flag("--all-unary", o.all_unary, "add every unary operation");

  add("pol", "polymorphism slices of relations", run_pol)->add_option("--rels", o.rels, "relation file")->required();

  auto* ci = add("ci", "the clone C_I of a principal ideal", run_ci);
  ci->add_option("--excluded", o.excluded, "excluded point a");
  ci->add_option("--gens", o.gens, "operations to test for membership");

  auto* pre = add("precomplete", "bounded maximality test", run_precomplete);
  pre->add_option("--gens", o.gens, "operation file")->required();

  add("chain", "the interval above the unary clone", run_chain);

  add("pairing", "injectivity of a pairing construction", run_pairing)
      ->add_option("--kind", o.kind, "pr, pr_delta, dr, hh-sym, hh-asym");

  auto* terms = add("terms", "partial evaluation of a term file", run_terms);
  terms->add_option("--file", o.file, "term file")->required();
  terms->add_option("--coloring", o.coloring, "builtin coloring");
  terms->add_option("--mu", o.mu, "number of colors");
  terms->add_option("--set", o.sets, "NAME=c1,c2,... registers F_NAME");
  terms->add_option("--c0", o.c0, "agreement color");

  add("canonical", "canonical subset and region classification", run_canonical)
      ->add_option("--fn", o.fn, "registry name of a binary function");

  auto* ramsey = add("ramsey", "finite partition relation n -> (m)^r_c", run_ramsey);
  ramsey->add_option("--n", o.n);
  ramsey->add_option("--m", o.m);
  ramsey->add_option("--r", o.r);
  ramsey->add_option("--c", o.c);

  auto* pr = add("prtest", "search for a monochromatic block pair", run_prtest);
  pr->add_option("--coloring", o.coloring);
  pr->add_option("--mu", o.mu);
  pr->add_option("--block-size", o.block_size);
  pr->add_option("--blocks", o.blocks);
  pr->add_option("--c0", o.c0);

  auto* indep = add("indep", "finite Hausdorff independent family", run_indep);
  indep->add_option("--m", o.m);
  indep->add_option("--q", o.q);
  indep->add_option("--width", o.width);

  add("suite", "run the criteria battery", run_suite)->add_option("name", o.suite, "fast, acceptance or full")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  finite::testing::set_compose_argument_swap(swap_compose);
  CLI::App* chosen = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out = handlers.at(chosen)(o);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(out, out_path, seconds);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return resource;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return resource;
  } catch (const ConstructionRefuted& e) {
    std::cerr << "refuted: " << e.what() << '\n';
    return refuted;
  } catch (const InvalidH& e) {
    std::cerr << "refuted: " << e.what() << '\n';
    return refuted;
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  }
}
