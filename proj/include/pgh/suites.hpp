#pragma once

// Verification suites run by `pgh verify`, one row per check, and the JSON
// form of a group report.

#include <string>
#include <vector>

#include <json.hpp>

#include "pgh/verify.hpp"

namespace pgh {

struct CheckRow {
  std::string suite;
  std::string group;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::vector<int> primes{2, 3, 5};
  int max_exponent = 4;
  bool deep = false;
  int jobs = 1;
};

/// suite is one of all, paper, sweep, homology, capability; InputError otherwise.
/// Rows come out in a fixed order independent of jobs.
std::vector<CheckRow> run_suite(const std::string& suite, const SuiteOptions& opt);

nlohmann::ordered_json report_json(const GroupReport& r);
/// 4 for 8/2, 2.5 for 5/2.
nlohmann::ordered_json half_json(int twice);

}  // namespace pgh
