#include "conescope_app/config.hpp"

#include <fstream>
#include <sstream>

#include "conescope/errors.hpp"

namespace conescope::app {

namespace {

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string("config key \"") + key + "\" has the wrong type");
  }
}

}  // namespace

ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir, std::string name) {
  try {
    require_keys(j,
                 {"group", "order", "automaton", "certificate", "r", "R", "R_list", "L_max", "lambda", "c", "g", "h",
                  "word", "search_radius", "collar", "outputs"},
                 "config");
  } catch (const InvalidDescriptor& e) {
    throw UsageError(e.what());
  }
  if (!j.contains("group")) throw UsageError("config needs a \"group\"");

  ExperimentConfig c;
  c.name = std::move(name);
  c.group = j.at("group");
  if (j.contains("order")) c.order = j.at("order");
  if (j.contains("automaton")) {
    const Json& a = j.at("automaton");
    c.automaton = a.is_string() ? read_json(base_dir / a.get<std::string>()) : a;
  }
  if (j.contains("certificate")) c.certificate = j.at("certificate");
  if (j.contains("r")) c.width = field<int>(j, "r");
  if (j.contains("R")) c.radius = field<int>(j, "R");
  if (j.contains("R_list")) c.radii = field<std::vector<int>>(j, "R_list");
  if (j.contains("L_max")) c.max_length = field<int>(j, "L_max");
  if (j.contains("lambda")) c.lambda = field<double>(j, "lambda");
  if (j.contains("c")) c.c = field<double>(j, "c");
  if (j.contains("g")) c.g = field<std::string>(j, "g");
  if (j.contains("h")) c.h = field<std::string>(j, "h");
  if (j.contains("word")) c.word = field<std::string>(j, "word");
  if (j.contains("search_radius")) c.search_radius = field<int>(j, "search_radius");
  if (j.contains("collar")) c.collar = field<int>(j, "collar");
  if (j.contains("outputs")) {
    const Json& o = j.at("outputs");
    try {
      require_keys(o, {"dir"}, "outputs");
    } catch (const InvalidDescriptor& e) {
      throw UsageError(e.what());
    }
    if (o.contains("dir")) c.out_dir = field<std::string>(o, "dir");
  }

  auto non_negative = [](const std::optional<int>& v, const char* key) {
    if (v && *v < 0) throw UsageError(std::string("config key \"") + key + "\" must be non-negative");
  };
  non_negative(c.width, "r");
  non_negative(c.radius, "R");
  non_negative(c.max_length, "L_max");
  non_negative(c.search_radius, "search_radius");
  if (c.collar < 0) throw UsageError("config key \"collar\" must be non-negative");
  if (c.radii) {
    for (int r : *c.radii) {
      if (r < 0) throw UsageError("R_list entries must be non-negative");
    }
  }
  if (c.lambda < 1.0 || c.c < 0.0) throw UsageError("need lambda >= 1 and c >= 0");
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_json(path), path.parent_path(), path.filename().string());
}

}  // namespace conescope::app
