#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qhgr {

enum class SuiteTier {
  Fast,  // reduced grids, a few seconds in total
  Full,  // the complete acceptance grids
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..11). Exceptions are caught and turned
/// into failures.
CriterionResult run_criterion(int id, SuiteTier tier);

/// Runs all criteria in order, reporting each result as it completes.
std::vector<CriterionResult> run_acceptance(SuiteTier tier,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS 3 matrix reproduction (0.12s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace qhgr
