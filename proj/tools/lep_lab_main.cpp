#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "leplab/experiments.hpp"
#include "leplab/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lep-lab: numerical experiments with locally eventually positive semigroups"};
  app.set_version_flag("--version", std::string(leplab::kArtifactName) + " " + leplab::kVersion);
  app.require_subcommand(1);

  CLI::App* list_cmd = app.add_subcommand("list", "List available experiments");

  CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment from a JSON config");
  std::string config_path;
  std::string out_dir = "out";
  int threads = 1;
  run_cmd->add_option("config", config_path, "Path to the experiment config (JSON)")
      ->required();
  run_cmd->add_option("--out", out_dir, "Output directory (data/*.csv and report.json)");
  run_cmd->add_option("--threads", threads, "Worker threads for independent sweep points")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (list_cmd->parsed()) {
    std::cout << leplab::list_experiments();
    return 0;
  }

  try {
    const nlohmann::json config = leplab::load_config(config_path);
    const leplab::RunOptions options{out_dir, threads};
    const leplab::ExperimentOutcome outcome = leplab::run_experiment(config, options);
    std::cout << outcome.report["experiment"].get<std::string>() << ": "
              << (outcome.pass ? "PASS" : "FAIL") << " (report in " << out_dir
              << "/report.json)\n";
    return outcome.pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
