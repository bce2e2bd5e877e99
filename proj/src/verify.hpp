#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace fpg::verify {

/// Identifies one randomized run of a named suite. max_degree/cases of 0
/// select the suite defaults.
struct SuiteSpec {
  std::string suite;
  int max_degree = 0;
  int cases = 0;
  std::uint64_t seed = 42;
};

struct Failure {
  std::string check;
  std::string inputs;            // JSON: enough to replay the case
  std::string expected;
  std::string actual;
  std::string first_difference;  // word / channel:word / monomial pair
};

struct CheckResult {
  std::string name;
  int cases_run = 0;
  std::vector<Failure> failures;
};

struct Report {
  SuiteSpec spec;
  std::string library_version;
  std::vector<std::string> checks;
  int cases_run = 0;
  std::vector<Failure> failures;
  double wall_ms = 0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
std::vector<std::string> checks_in_suite(const std::string& suite);

/// Runs one named check with explicit parameters (the acceptance suite
/// pins its case counts through this).
CheckResult run_check(const std::string& check, int max_degree, int cases,
                      std::uint64_t seed);

Report run_suite(const SuiteSpec& spec);

/// Module-invariant -> suite/check map; every invariant is owned by
/// exactly one suite. Emitted with every report.
nlohmann::json coverage_map();

nlohmann::json report_to_json(const Report& report);

}  // namespace fpg::verify
