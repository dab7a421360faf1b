#include "magsym/scenario.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "magsym/serialize.hpp"

namespace magsym {

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
  Scenario s;
  try {
    s.label = j.value("label", "scenario");
    s.seed = j.value("seed", 0ull);
    if (j.contains("constants")) s.consts = constants_from_json(j.at("constants"));
    if (!j.contains("field")) throw ScenarioError("scenario needs a 'field' selection");
    s.field = j.at("field");
    potential_from_json(s.field);  // validate now, rebuild per run
    if (!j.contains("checks") || !j.at("checks").is_array() || j.at("checks").empty())
      throw ScenarioError("scenario needs a non-empty 'checks' array");
    for (const auto& c : j.at("checks")) {
      ScenarioCheck sc;
      if (c.is_string()) {
        sc.name = c.get<std::string>();
        sc.params = Json::object();
      } else if (c.is_object()) {
        if (!c.contains("name")) throw ScenarioError("check entry needs a 'name'");
        sc.name = c.at("name").get<std::string>();
        sc.params = c;
        sc.params.erase("name");
      } else {
        throw ScenarioError("check entries must be names or objects");
      }
      if (find_check(sc.name) == nullptr)
        throw ScenarioError("unknown check '" + sc.name + "'");
      if (sc.params.contains("tolerance")) {
        if (!sc.params.at("tolerance").is_number() ||
            sc.params.at("tolerance").get<double>() <= 0.0)
          throw ScenarioError("check '" + sc.name + "': tolerance must be a positive number");
      }
      s.checks.push_back(std::move(sc));
    }
    if (j.contains("outputs")) {
      const auto& out = j.at("outputs");
      if (out.contains("report")) s.report_path = out.at("report").get<std::string>();
      if (out.contains("export_dir")) s.export_dir = out.at("export_dir").get<std::string>();
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("invalid scenario: ") + e.what());
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ScenarioError("cannot open scenario file " + file.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return parse_scenario(j);
}

namespace {

Json run_one(const Scenario& scenario, const ScenarioCheck& sc,
             const std::optional<std::filesystem::path>& export_dir) {
  const CheckInfo* info = find_check(sc.name);
  CheckContext ctx{potential_from_json(scenario.field), scenario.consts, scenario.seed,
                   export_dir};
  Json entry;
  entry["name"] = sc.name;
  entry["anchor"] = info->anchor;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome outcome = info->run(ctx, sc.params);
    entry["status"] = to_string(outcome.status);
    entry["measured"] = std::move(outcome.measured);
    entry["expected"] = std::move(outcome.expected);
    entry["residuals"] = std::move(outcome.residuals);
    if (!outcome.note.empty()) entry["note"] = outcome.note;
  } catch (const std::exception& e) {
    entry["status"] = "fail";
    entry["note"] = std::string("check crashed: ") + e.what();
    entry["measured"] = Json::object();
    entry["expected"] = Json::object();
    entry["residuals"] = Json::object();
  }
  const auto t1 = std::chrono::steady_clock::now();
  entry["runtime_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return entry;
}

}  // namespace

RunResult run_scenario(const Scenario& scenario, const RunOptions& options) {
  const auto export_dir = options.export_dir ? options.export_dir : scenario.export_dir;
  if (export_dir) std::filesystem::create_directories(*export_dir);

  std::vector<Json> entries(scenario.checks.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < scenario.checks.size(); ++i)
      entries[i] = run_one(scenario, scenario.checks[i], export_dir);
  } else {
    // Bounded fan-out; results land in declaration order by construction.
    std::vector<std::future<Json>> futures(scenario.checks.size());
    size_t next = 0, running_from = 0;
    while (running_from < scenario.checks.size()) {
      while (next < scenario.checks.size() && next - running_from < static_cast<size_t>(jobs)) {
        const ScenarioCheck& sc = scenario.checks[next];
        futures[next] = std::async(std::launch::async, [&scenario, &sc, &export_dir] {
          return run_one(scenario, sc, export_dir);
        });
        ++next;
      }
      entries[running_from] = futures[running_from].get();
      ++running_from;
    }
  }

  int npass = 0, nfail = 0, nna = 0;
  Json checks = Json::array();
  for (Json& e : entries) {
    const std::string status = e["status"].get<std::string>();
    if (status == "pass")
      ++npass;
    else if (status == "not-applicable")
      ++nna;
    else
      ++nfail;
    checks.push_back(std::move(e));
  }

  RunResult result;
  result.report["scenario"] = scenario.label;
  result.report["seed"] = scenario.seed;
  result.report["version"] = MAGSYM_VERSION;
  result.report["overall"] = nfail == 0 ? "pass" : "fail";
  result.report["counts"] = {{"pass", npass}, {"fail", nfail}, {"not-applicable", nna}};
  result.report["checks"] = std::move(checks);
  result.exit_code = nfail == 0 ? 0 : 1;

  const auto report_path = options.report_path ? options.report_path : scenario.report_path;
  if (report_path) {
    if (report_path->has_parent_path())
      std::filesystem::create_directories(report_path->parent_path());
    std::ofstream out(*report_path);
    if (!out) throw std::runtime_error("cannot write report to " + report_path->string());
    out << result.report.dump(2) << "\n";
  }
  return result;
}

std::string format_check_listing() {
  std::ostringstream out;
  for (const CheckInfo& c : check_registry()) {
    out << c.name << " — " << c.anchor;
    if (c.default_tolerance > 0.0)
      out << " (default tolerance " << c.default_tolerance << ")";
    else
      out << " (exact)";
    out << "\n    " << c.description << "\n";
  }
  out << check_registry().size() << " checks registered\n";
  return out.str();
}

}  // namespace magsym
