// Acceptance suite: one line per criterion, exit status 1 when any fails.

#include <cstdio>
#include <cstdlib>

#include "mapasym/checks.hpp"

int main(int argc, char** argv) {
  using namespace mapasym;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = suite_criteria(Suite::kAll);

  int failures = 0;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id);
    std::printf("%s\n", format_line(r).c_str());
    for (const auto& [name, value] : r.measurements) {
      std::printf("      %s = %s\n", name.c_str(), value.c_str());
    }
    std::fflush(stdout);
    if (!r.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(ids.size()) - failures, ids.size());
  return failures == 0 ? 0 : 1;
}
