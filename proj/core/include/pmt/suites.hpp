#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "pmt/classes.hpp"

namespace pmt {

struct SuiteOptions {
  /// Largest S_n built into the catalog for the verification runs.
  int spike_max = 7;
  /// When nonempty, witness certificates are written here as JSON.
  std::string cert_dir;
  /// Criteria within a suite run concurrently when > 1 (0 = hardware).
  int jobs = 1;
  std::uint64_t enum_budget = 2'000'000'000ULL;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
  std::vector<std::string> certificates;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  double seconds() const;
};

/// duality, compression, natural, theorem6, theorem7, sp, enumeration.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts = {});

/// The numbered verification checks bundled by the suites; a check
/// fails when its content fails or its stated time budget is exceeded.
int criterion_count();
CheckResult run_criterion(int number, const SuiteOptions& opts = {});

/// Deterministic JSON: all volatile data (timestamp, runtimes) is
/// isolated in the single "meta" field.
nlohmann::json reports_to_json(const std::vector<SuiteReport>& reports);

}  // namespace pmt
