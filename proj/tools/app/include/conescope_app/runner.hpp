#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conescope/group_model.hpp"
#include "conescope_app/config.hpp"

namespace conescope::app {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kFail = 1, kUnknown = 2, kUsage = 3 };

const std::vector<std::string>& command_names();

struct RunOptions {
  std::string command;
  std::optional<int> radius;
  std::optional<int> width;
  std::optional<int> max_length;
  Traversal traversal = Traversal::Forward;
  bool timings = false;
};

// Report files keyed by file name, e.g. "ray.json", "ray.txt".
struct RunResult {
  int exit_code = kPass;
  std::string verdict;
  std::map<std::string, std::string> files;
};

// Runs one command in memory. Throws UsageError for unknown commands and
// conescope::Error for failures inside the library.
RunResult execute(const ExperimentConfig& config, const RunOptions& options);

}  // namespace conescope::app
