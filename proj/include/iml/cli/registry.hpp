#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iml/cli/acceptance.hpp"

namespace iml::cli {

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "v1";

struct Param {
  enum class Type { kInt, kDouble, kString, kBool, kJson } type = Type::kInt;
  std::string name;
  nlohmann::json default_value;
  double min = -1e18, max = 1e18;  // numeric bounds, inclusive
  std::string help;
};

struct ProblemEntry {
  std::string id;
  std::string session;  // date of the problem session, YYYY-MM-DD
  std::string topic;
  std::string kind;     // checker | exact | scan | monte-carlo
  std::string summary;
  std::vector<Param> params;
  // Receives validated parameters (defaults filled in) and the master seed.
  std::function<nlohmann::json(const nlohmann::json&, std::uint64_t)> runner;
};

const std::vector<ProblemEntry>& registry();
// Entries whose id starts with the filter, or whose session or topic equals it.
// An empty filter lists everything.
std::vector<const ProblemEntry*> list_problems(const std::string& filter = "");
const ProblemEntry& find_problem(const std::string& id);  // UnknownProblem
nlohmann::json describe(const ProblemEntry& e);

// Fills defaults; BadParams for unknown keys, wrong types or out-of-range values.
nlohmann::json validate_params(const ProblemEntry& e, const nlohmann::json& params);

struct RunReport {
  std::string id;
  nlohmann::json params;
  std::uint64_t seed = 0;
  double wall_seconds = 0;
  nlohmann::json payload;
  std::string version = kArtifactVersion;
};
// UnknownProblem for unregistered ids; BadParams when validation fails or the
// runner rejects the parameters.
RunReport run(const std::string& id, const nlohmann::json& params, std::uint64_t seed);
nlohmann::json to_json(const RunReport& r);
// payload["rows"] (array of objects) as a table, otherwise one key,value line
// per scalar field.
std::string payload_csv(const nlohmann::json& payload);

struct GoldenDiff {
  std::string table;
  std::string detail;
};
struct SuiteReport {
  std::vector<CriterionResult> criteria;
  std::vector<GoldenDiff> diffs;
  std::vector<std::string> notes;  // stretch rows without a golden counterpart
  bool all_pass = true;
};
// Runs the selected criteria (all when `only` is empty) and compares every
// table with golden_dir/<schema>/<table>.csv. Golden files hold the quick
// profile; rows beyond them (full-profile stretch rows) are reported but not
// compared. With write_golden the tables are written instead.
SuiteReport reproduce_all(Profile profile, const std::string& golden_dir, const std::vector<int>& only = {},
                          bool write_golden = false);

}  // namespace iml::cli
