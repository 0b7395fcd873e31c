#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace heyting {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteria = 10;
inline constexpr std::uint64_t kDefaultSeed = 20240501;

// Runs one acceptance criterion (1..kCriteria). Exceptions become failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);

// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed = kDefaultSeed,
    const std::function<void(const CriterionResult&)>& sink = {});

// Criteria known to fail as stated: the printed KG pre-true formula (9) is
// an intuitionistic tautology, so the cited equivalence cannot hold.
bool expected_failure(int id);

// "criterion 3 PASS jankov-iff: detail" (no timing).
std::string format_result(const CriterionResult& r);

}  // namespace heyting
