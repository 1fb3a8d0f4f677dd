#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thom/report.hpp"

namespace thom {

struct RunOptions {
  std::uint64_t seed = 0;
  bool verify = true;       // run the embedded identity checks
  bool timing = false;      // record wall-clock seconds in the report
  bool parallel_checks = true;
};

std::vector<std::string> command_names();

// Runs one command object {"op": ..., ...} against a loaded model. Errors are
// rethrown with the operation name prefixed and their type preserved.
Report execute(const ModelSet& model, const Json& command, const RunOptions& options = {});

}  // namespace thom
