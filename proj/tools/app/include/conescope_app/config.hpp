#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conescope/descriptors.hpp"

namespace conescope::app {

// Bad command line, unreadable or malformed config.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One experiment: a group, optionally an order and an automaton, and the
// parameters the commands read. Keys:
//   group, order, automaton (object or path relative to the config),
//   certificate, r, R, R_list, L_max, lambda, c, g, h, word,
//   search_radius, collar, outputs {dir}
struct ExperimentConfig {
  std::string name;  // file name of the config, without directories
  Json group;
  std::optional<Json> order;
  std::optional<Json> automaton;
  std::optional<Json> certificate;
  std::optional<int> width;
  std::optional<int> radius;
  std::optional<std::vector<int>> radii;
  std::optional<int> max_length;
  double lambda = 1.0;
  double c = 0.0;
  std::optional<std::string> g;
  std::optional<std::string> h;
  std::optional<std::string> word;
  std::optional<int> search_radius;
  int collar = 0;
  std::optional<std::string> out_dir;
};

ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir, std::string name);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace conescope::app
