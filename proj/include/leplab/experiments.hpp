#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace leplab {

struct RunOptions {
  std::filesystem::path out_dir = "out";
  int threads = 1;
};

struct ExperimentOutcome {
  bool pass = false;
  nlohmann::json report;
};

/// Names of the experiments run() accepts, in listing order.
const std::vector<std::string>& experiment_names();

/// One line per experiment: name plus what it measures.
std::string list_experiments();

/// Loads and minimally validates a config file (valid JSON with an
/// "experiment" field); deeper validation happens in run_experiment.
nlohmann::json load_config(const std::filesystem::path& path);

/// Dispatches on config["experiment"], writes <out>/data/*.csv and
/// <out>/report.json, and returns the report with the overall pass flag
/// (the conjunction of all per-check flags). Invalid configs throw
/// std::invalid_argument with the offending field path.
ExperimentOutcome run_experiment(const nlohmann::json& config, const RunOptions& options);

}  // namespace leplab
