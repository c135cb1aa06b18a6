#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace glsm {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

// Runs every acceptance criterion, printing one pass/fail line per criterion.
// Returns true when all pass.
bool run_acceptance(std::ostream& os, std::uint64_t seed = 20240613);

std::vector<CriterionResult> acceptance_results(std::uint64_t seed = 20240613);

} // namespace glsm
