#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapasym/real.hpp"

namespace mapasym {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Short human summary of what was measured.
  std::string summary;
  /// Named measurements (value rendered as text).
  std::vector<std::pair<std::string, std::string>> measurements;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

enum class Suite { kAll, kConstants, kIdentities, kOracle, kConvergence };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// Criterion ids belonging to a suite:
///   constants 1, 2, 9; identities 3, 4, 8; oracle 5, 10; convergence 6, 7.
std::vector<int> suite_criteria(Suite suite);

/// Runs one acceptance criterion (1..10) at the given precision.
CriterionResult run_criterion(int id, Precision prec = kDefaultPrecision);

std::vector<CriterionResult> run_suite(Suite suite, Precision prec = kDefaultPrecision);

/// "PASS C3 <title> | <summary> | 0.12s / 5s"
std::string format_line(const CriterionResult& result);

}  // namespace mapasym
