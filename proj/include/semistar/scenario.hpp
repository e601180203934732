#pragma once

#include "semistar/expr.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace semistar {

inline constexpr const char* kToolVersion = "0.4.0";
inline constexpr int kScenarioSchema = 1;

/// Malformed scenario: bad JSON, schema violation, parse error, unbound name.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AssertionResult {
  std::string id;
  std::string kind;
  std::string verdict;  // "pass", "fail"
  std::string witness;
  std::string provenance;
  long long millis = 0;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::string domain;
  /// Candidate-prime lists echoed with their provenance notes.
  std::vector<std::pair<std::string, std::string>> candidates;
  std::vector<AssertionResult> assertions;

  int passed() const;
  int total() const { return static_cast<int>(assertions.size()); }
  int exit_code() const { return passed() == total() ? 0 : 1; }
};

/// Runs the assertions in declaration order. `seed` overrides the scenario seed.
Report run_scenario(const nlohmann::json& doc, std::optional<std::uint64_t> seed = std::nullopt);
Report run_scenario_file(const std::string& path, std::optional<std::uint64_t> seed = std::nullopt);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r);

/// Deterministic per-assertion seed.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& id);

}  // namespace semistar
