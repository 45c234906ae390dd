// Command-line front end: list registered problems, run one, or reproduce the
// acceptance tables against the golden CSVs.
//
// Exit codes: 0 ok, 1 a criterion failed or an unexpected error, 2 bad
// parameters or input rejected by a solver, 3 unknown problem id, 4 golden
// mismatch.

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "iml/cli/acceptance.hpp"
#include "iml/cli/registry.hpp"
#include "iml/core/error.hpp"
#include "verbs.hpp"

#ifndef IML_GOLDEN_DIR
#define IML_GOLDEN_DIR "golden"
#endif

namespace {

using namespace iml;

constexpr int kExitFailed = 1, kExitBadParams = 2, kExitUnknown = 3, kExitGolden = 4;

// Everything runs on one thread; the variable is read so a bad value is
// reported rather than ignored.
int thread_count() {
  const char* env = std::getenv("IML_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < 1) fail(ErrorCode::kBadParams, "IML_THREADS must be a positive integer");
  return static_cast<int>(v);
}

int cmd_list(const std::string& filter, bool as_json) {
  auto entries = cli::list_problems(filter);
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto* e : entries) out.push_back(cli::describe(*e));
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const auto* e : entries) std::cout << e->id << "  [" << e->session << ", " << e->kind << "]  " << e->summary << '\n';
  return 0;
}

int cmd_run(const std::string& id, const std::string& params_text, std::uint64_t seed, const std::string& format,
            const std::string& out_path) {
  nlohmann::json params;
  try {
    params = params_text.empty() ? nlohmann::json::object() : nlohmann::json::parse(params_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kBadParams, std::string("params are not valid JSON: ") + e.what());
  }
  auto report = cli::run(id, params, seed);
  auto j = cli::to_json(report);
  j["threads"] = thread_count();
  std::string text = format == "csv" ? cli::payload_csv(report.payload) : j.dump(2) + "\n";
  if (out_path.empty()) std::cout << text;
  else std::ofstream(out_path) << text;
  return 0;
}

int cmd_reproduce(const std::string& profile_name, const std::string& golden, const std::vector<int>& only,
                  bool write_golden) {
  auto profile = cli::profile_from_string(profile_name);
  auto report = cli::reproduce_all(profile, golden, only, write_golden);
  for (const auto& c : report.criteria)
    std::cout << "criterion " << c.number << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << ": " << c.summary
              << " (" << c.seconds << " s)\n";
  for (const auto& n : report.notes) std::cout << "note: " << n << '\n';
  for (const auto& d : report.diffs) std::cout << "golden mismatch in " << d.table << ": " << d.detail << '\n';
  if (write_golden) std::cout << "golden tables written under " << golden << '\n';
  if (!report.diffs.empty()) return kExitGolden;
  return report.all_pass ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers, checkers and experiments for open problems in combinatorics"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string filter;
  bool list_json = false;
  auto* list = app.add_subcommand("list", "list registered problems");
  list->add_option("--filter", filter, "id prefix, session date or topic");
  list->add_flag("--json", list_json, "full descriptions with parameter schemas");
  list->callback([&] { action = [&] { return cmd_list(filter, list_json); }; });

  std::string id, params_text, format = "json", out_path;
  std::uint64_t seed = 1;
  auto* run = app.add_subcommand("run", "run one problem");
  run->add_option("--id", id, "problem id")->required();
  run->add_option("--params", params_text, "parameters as a JSON object");
  run->add_option("--seed", seed, "master seed");
  run->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--out", out_path, "write the report to a file");
  run->callback([&] { action = [&] { return cmd_run(id, params_text, seed, format, out_path); }; });

  std::string profile = "quick", golden = IML_GOLDEN_DIR;
  std::vector<int> only;
  bool write_golden = false;
  auto* reproduce = app.add_subcommand("reproduce", "run the acceptance criteria and compare with golden tables");
  reproduce->add_option("--profile", profile, "quick | full");
  reproduce->add_option("--golden", golden, "golden table directory");
  reproduce->add_option("--only", only, "criterion numbers")->delimiter(',');
  reproduce->add_flag("--write-golden", write_golden, "write the tables instead of comparing");
  reproduce->callback([&] { action = [&] { return cmd_reproduce(profile, golden, only, write_golden); }; });

  tools::add_module_verbs(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadParams;
  }

  try {
    thread_count();
    if (action) return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::kUnknownProblem) return kExitUnknown;
    return kExitBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return 0;
}
