#include <CLI11.hpp>

#include <iostream>

#include "magsym/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"magsym: generator and translation-operator checks for charged particles "
               "in magnetic fields"};
  app.require_subcommand(1);

  std::string scenario_file;
  std::string out_path;
  std::string export_dir;
  int jobs = 1;

  CLI::App* run = app.add_subcommand("run", "run a scenario file and write a report");
  run->add_option("scenario", scenario_file, "scenario JSON file")->required();
  run->add_option("--out", out_path, "report path (overrides the scenario's outputs.report)");
  run->add_option("--export-dir", export_dir, "directory for CSV exports");
  run->add_option("--jobs", jobs, "checks to run in parallel")->check(CLI::PositiveNumber);

  CLI::App* list = app.add_subcommand("list-checks", "list registered checks");
  CLI::App* version = app.add_subcommand("version", "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  if (list->parsed()) {
    std::cout << magsym::format_check_listing();
    return 0;
  }
  if (version->parsed()) {
    std::cout << "magsym " << MAGSYM_VERSION << "\n";
    return 0;
  }

  try {
    magsym::Scenario scenario = magsym::load_scenario(scenario_file);
    magsym::RunOptions options;
    if (!out_path.empty()) options.report_path = out_path;
    if (!export_dir.empty()) options.export_dir = export_dir;
    options.jobs = jobs;
    magsym::RunResult result = magsym::run_scenario(scenario, options);
    for (const auto& check : result.report.at("checks")) {
      std::cout << "[" << check.at("status").get<std::string>() << "] "
                << check.at("name").get<std::string>();
      if (check.contains("note")) std::cout << " (" << check.at("note").get<std::string>() << ")";
      std::cout << "\n";
    }
    std::cout << "overall: " << result.report.at("overall").get<std::string>() << "\n";
    return result.exit_code;
  } catch (const magsym::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
