#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thom {

struct CaseResult {
  std::uint64_t index = 0;
  bool pass = false;
  std::string detail;  // failure description, empty on success
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  bool all_pass() const;
  std::size_t failures() const;
};

// Randomized identity suites. Case i draws its models from
// ModelGenerator(seed, i), so results do not depend on scheduling; cases run
// concurrently when `parallel` is set.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int cases, bool parallel = true);

}  // namespace thom
