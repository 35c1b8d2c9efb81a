#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace clonelab::cli {

using Report = nlohmann::ordered_json;

enum ExitStatus : int { ok = 0, refuted = 1, usage = 2, resource = 3 };

/// Bad input supplied on the command line (missing file, malformed value).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flags shared by every subcommand; each command reads only the ones it needs.
struct Options {
  unsigned carrier = 2;
  unsigned cap = 2;
  unsigned working_cap = 3;
  std::string box = "0..64:offdiag";
  std::uint64_t seed = 20240601;
  std::uint64_t budget = 64;
  std::string gens;
  std::string rels;
  std::string file;
  unsigned excluded = 1;
  std::string kind;
  std::string fn;
  std::string coloring = "sum-mod";
  unsigned mu = 8;
  std::vector<std::string> sets;
  unsigned n = 6, m = 3, r = 2, c = 2;
  unsigned block_size = 2;
  unsigned blocks = 8;
  unsigned c0 = 0;
  unsigned q = 4;
  unsigned width = 3;
  bool all_unary = false;
  std::string suite;
};

struct Outcome {
  Report report;
  int status = ok;
};

Outcome run_closure(const Options& o);
Outcome run_pol(const Options& o);
Outcome run_ci(const Options& o);
Outcome run_precomplete(const Options& o);
Outcome run_chain(const Options& o);
Outcome run_pairing(const Options& o);
Outcome run_terms(const Options& o);
Outcome run_canonical(const Options& o);
Outcome run_ramsey(const Options& o);
Outcome run_prtest(const Options& o);
Outcome run_indep(const Options& o);
Outcome run_suite(const Options& o);

}  // namespace clonelab::cli
