#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mhp {

struct AcceptanceOptions {
  std::uint64_t seed = 20261016;
  unsigned jobs = 1;
  // Criterion ids to run; empty runs all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 8;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

// "[PASS] 3 identification (1.2 s): ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace mhp
