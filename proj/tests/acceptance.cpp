// Runs acceptance criteria 1..14 and prints one PASS/FAIL line per criterion.
// Tables are also checked against the golden CSVs; a mismatch fails the
// criterion that produced the table.
//
//   acceptance [quick|full]

#include <iostream>
#include <map>
#include <string>

#include "iml/cli/acceptance.hpp"
#include "iml/cli/registry.hpp"

int main(int argc, char** argv) {
  using namespace iml::cli;
  const Profile profile = profile_from_string(argc > 1 ? argv[1] : "quick");
  auto report = reproduce_all(profile, IML_GOLDEN_DIR);

  std::map<std::string, int> owner;
  for (const auto& c : report.criteria)
    for (const auto& t : c.tables) owner[t.name] = c.number;
  std::map<int, std::vector<std::string>> mismatches;
  for (const auto& d : report.diffs) mismatches[owner[d.table]].push_back(d.table + ": " + d.detail);

  int failed = 0;
  for (const auto& c : report.criteria) {
    const auto& diffs = mismatches[c.number];
    const bool pass = c.pass && diffs.empty();
    failed += !pass;
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << ": " << c.summary;
    if (!diffs.empty()) std::cout << "; " << diffs.size() << " golden mismatches";
    std::cout << " (" << c.seconds << " s)\n";
    for (const auto& d : diffs) std::cout << "    golden mismatch " << d << '\n';
  }
  for (const auto& n : report.notes) std::cout << "note: " << n << '\n';
  std::cout << (kCriteria - failed) << " of " << kCriteria << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
