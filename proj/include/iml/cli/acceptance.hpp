#pragma once

#include <string>
#include <vector>

namespace iml::cli {

enum class Profile { kQuick, kFull };
Profile profile_from_string(const std::string& s);  // "quick" | "full", BadParams otherwise

// A result table; cells are already formatted so golden comparison is textual.
struct Table {
  std::string name;  // golden file stem
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
std::string to_csv(const Table& t);
Table table_from_csv(const std::string& name, const std::string& text);

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string summary;  // one line
  std::vector<Table> tables;
  double seconds = 0;
};

inline constexpr int kCriteria = 14;
// Runs one acceptance criterion. The full profile adds the stretch rows
// (cubic graphs on 18 and 20 vertices, exact distances in GL(5,2)).
CriterionResult run_criterion(int number, Profile profile);

}  // namespace iml::cli
