#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace checkerboard {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

// Runs every closed-form count against the exhaustive oracles:
// checkerboard grids with N <= max_n and lattice spans b - a <= max_span.
std::vector<SuiteResult> verify_counting(int max_n, int max_span = 12);

}  // namespace checkerboard
