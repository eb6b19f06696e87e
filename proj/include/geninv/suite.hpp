#ifndef GENINV_SUITE_HPP_
#define GENINV_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace geninv {

struct SuiteConfig {
  std::string suite = "all";  // semigroup | matrix | operator | all
  int order = 3;              // exhaustive Cayley enumeration bound (1..4)
  std::uint64_t seed = 20240611;
  int trials = 500;              // random-matrix batch size
  int transformation_count = 20;  // random transformation semigroups
  int matrix_dim = 6;             // random matrices up to this size
  int entry_bound = 5;
  long enumeration_budget_ms = 0;  // cap on the exhaustive enumeration phase
  int threads = 1;
};

struct CheckResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::vector<nlohmann::json> counterexamples;  // replayable payloads
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;
  long long total_cases = 0;
  long long total_failures = 0;
  double wall_seconds = 0.0;  // never part of the canonical JSON
};

// Runs every registered law of the requested suites over deterministic
// corpora (exhaustive small Cayley tables, seeded transformation
// semigroups, seeded exact-rank random matrices).
SuiteReport run_suite(const SuiteConfig& config);

// Canonical machine report; with include_timing = false (the default) the
// output depends only on the configuration, byte for byte.
nlohmann::json suite_report_json(const SuiteReport& report,
                                 bool include_timing = false);

}  // namespace geninv

#endif  // GENINV_SUITE_HPP_
