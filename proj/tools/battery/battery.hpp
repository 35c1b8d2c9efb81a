#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace clonelab::battery {

enum class Scale { fast, acceptance, full };

/// Parses "fast", "acceptance" or "full"; throws InvalidArgument otherwise.
Scale parse_scale(const std::string& name);
std::string to_string(Scale scale);

struct Config {
  Scale scale = Scale::acceptance;
  std::uint64_t seed = 20240601;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool verdict = false;
  double seconds = 0.0;
  double time_limit = 0.0;
  nlohmann::ordered_json detail;

  bool passed() const { return verdict && seconds <= time_limit; }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;
  std::function<bool(const Config&, nlohmann::ordered_json&)> run;
};

const std::vector<Criterion>& criteria();

/// Runs one criterion; exceptions count as failures and are recorded in the detail.
CriterionResult run_criterion(const Criterion& c, const Config& config);
std::vector<CriterionResult> run_all(const Config& config, const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace clonelab::battery
