#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "magsym/checks.hpp"

namespace magsym {

/// Raised for malformed scenario files; the CLI maps it to exit code 2.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioCheck {
  std::string name;
  Json params;
};

struct Scenario {
  std::string label;
  std::uint64_t seed = 0;
  PhysicalConstants consts;
  Json field;  // validated lazily into a GaugePotential
  std::vector<ScenarioCheck> checks;
  std::optional<std::filesystem::path> report_path;
  std::optional<std::filesystem::path> export_dir;
};

Scenario parse_scenario(const Json& j);
Scenario load_scenario(const std::filesystem::path& file);

struct RunOptions {
  std::optional<std::filesystem::path> report_path;  // overrides the scenario
  std::optional<std::filesystem::path> export_dir;
  int jobs = 1;
};

struct RunResult {
  Json report;
  /// 0 all checks pass, 1 any failure or crash.
  int exit_code = 0;
};

/// Execute every check (in parallel when jobs > 1); the report lists
/// outcomes in declaration order regardless of completion order and is
/// byte-identical across runs except for the runtime_ms fields.
RunResult run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// One line per registered check: "<name> — <anchor> (default tolerance ..)".
std::string format_check_listing();

}  // namespace magsym
