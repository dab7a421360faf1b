#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magsym/fields.hpp"
#include "magsym/serialize.hpp"

namespace magsym {

enum class CheckStatus { pass, fail, not_applicable };

const char* to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::fail;
  Json measured = Json::object();
  Json expected = Json::object();   // values annotated with provenance
  Json residuals = Json::object();
  std::string note;
};

struct CheckContext {
  GaugePotential A;
  PhysicalConstants consts;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> export_dir;
};

struct CheckInfo {
  std::string name;
  std::string anchor;            // equation or section the check verifies
  double default_tolerance;      // 0 for exact (coefficient-level) checks
  std::string description;
  std::function<CheckOutcome(const CheckContext&, const Json& params)> run;
};

/// All registered checks, in listing order.
const std::vector<CheckInfo>& check_registry();

const CheckInfo* find_check(const std::string& name);

/// Expected-value annotation: provenance is "paper", "derived" or "trivial".
Json expected_value(const Json& value, const std::string& provenance,
                    const std::string& anchor = "");

}  // namespace magsym
