#pragma once

#include <string>
#include <vector>

namespace detrs {

struct SelftestLine {
  std::string suite;
  bool pass;
  std::string detail;
};

// Tiny-field exhaustive checks against the brute-force oracles. Runs in a
// few seconds.
std::vector<SelftestLine> run_selftest();

}  // namespace detrs
