#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "conescope/errors.hpp"
#include "conescope/group_model.hpp"
#include "conescope_app/config.hpp"
#include "conescope_app/runner.hpp"

namespace fs = std::filesystem;
using namespace conescope;

namespace {

void apply_cap_from_environment() {
  const char* cap = std::getenv("CONESCOPE_CAP");
  if (cap == nullptr) return;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(cap, &used);
    if (used != std::string(cap).size() || value == 0) throw std::invalid_argument(cap);
    set_enumeration_cap(value);
  } catch (const std::exception&) {
    throw app::UsageError(std::string("CONESCOPE_CAP must be a positive integer, got \"") + cap + "\"");
  }
}

void write_files(const fs::path& dir, const app::RunResult& result) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw app::UsageError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& [name, content] : result.files) {
    std::ofstream out(dir / name, std::ios::binary);
    out << content;
    if (!out) throw app::UsageError("cannot write " + (dir / name).string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Exact experiments with positive cones of left orders"};
  cli.set_version_flag("--version", app::kToolVersion);

  std::string config_path;
  std::string command;
  std::string out_dir;
  std::string traversal = "forward";
  app::RunOptions options;

  auto add_shared = [&](CLI::App* target) {
    target->add_option("--out", out_dir, "Directory for report files");
    target->add_option("--radius", options.radius, "Ball radius R (or N for ray)")->check(CLI::NonNegativeNumber);
    target->add_option("--width", options.width, "Path width r")->check(CLI::NonNegativeNumber);
    target->add_option("--lmax", options.max_length, "Maximum accepted word length")->check(CLI::NonNegativeNumber);
    target->add_option("--traversal", traversal, "Letter order for traversals")
        ->check(CLI::IsMember({"forward", "reversed"}));
    target->add_flag("--timings", options.timings, "Add wall-clock timings to reports");
  };
  cli.add_option("--config", config_path, "Experiment config (JSON)");
  cli.add_option("--command", command, "Command to run")->check(CLI::IsMember(app::command_names()));
  add_shared(&cli);

  CLI::App* run = cli.add_subcommand("run", "Run a command: run <config> <command>");
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  run->add_option("command", command, "Command to run")->required()->check(CLI::IsMember(app::command_names()));
  run->fallthrough();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : app::kUsage;
  }

  try {
    if (config_path.empty() || command.empty()) {
      throw app::UsageError("need a config and a command (see --help)");
    }
    apply_cap_from_environment();
    options.command = command;
    options.traversal = traversal == "reversed" ? Traversal::Reversed : Traversal::Forward;
    const app::ExperimentConfig config = app::load_config(config_path);
    const app::RunResult result = app::execute(config, options);
    const fs::path dir = !out_dir.empty() ? fs::path(out_dir) : fs::path(config.out_dir.value_or("conescope-out"));
    write_files(dir, result);
    std::cout << command << ": " << result.verdict << " (reports in " << dir.string() << ")\n";
    return result.exit_code;
  } catch (const app::UsageError& e) {
    std::cerr << "conescope: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "conescope: " << e.what() << "\n";
  }
  return app::kUsage;
}
