#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modrep/cli/scenario.hpp"
#include "modrep/extblocks/extblocks.hpp"

namespace modrep::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
  std::string name;
  bool passed = false;
  /// One-line human summary.
  std::string summary;
  nlohmann::ordered_json result;
  /// Wall time; reported in text output only so JSON stays deterministic.
  double seconds = 0;
};

struct Report {
  Scenario scenario;
  nlohmann::ordered_json summary;
  std::vector<CheckResult> checks;
  /// Present when ext_blocks or correspondence ran.
  std::optional<extblocks::ExtBlockReport> ext;

  bool passed() const;
  const CheckResult* check(const std::string& name) const;
};

/// Runs every requested check. Failures are recorded, not thrown; errors in
/// the scenario itself (bad field, bad line) propagate.
Report run_scenario(const Scenario& s);

enum class Format { Json, Dot, Text };
Format parse_format(const std::string& name);
/// Deterministic for JSON and DOT. DOT requires the ext_blocks check.
std::string emit(const Report& r, Format f);

}  // namespace modrep::cli
