// Runs the criteria battery and prints one line per criterion:
//   PASS|FAIL <id> <title> verdict=<bool> time=<s>/<limit>s
// Usage: acceptance [fast|acceptance|full] [--json]

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "battery.hpp"

int main(int argc, char** argv) {
  using namespace clonelab::battery;
  Config cfg;
  bool dump_json = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--json") == 0) {
      dump_json = true;
    } else {
      try {
        cfg.scale = parse_scale(argv[i]);
      } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
      }
    }
  }

  int failures = 0;
  run_all(cfg, [&](const CriterionResult& r) {
    if (!r.passed()) ++failures;
    std::printf("%s %2d %-34s verdict=%s time=%.3f/%gs\n", r.passed() ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.verdict ? "true" : "false", r.seconds, r.time_limit);
    if (dump_json || !r.passed()) std::printf("     %s\n", r.detail.dump().c_str());
    std::fflush(stdout);
  });
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria().size()) - failures, criteria().size());
  return failures == 0 ? 0 : 1;
}
