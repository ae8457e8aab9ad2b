#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace parthom::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20240501;
  unsigned threads = 1;
  // Called after each criterion finishes, e.g. to stream progress.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run(const Options& opts = {});

// "criterion 3 [eulerian identity]: PASS (0.41 s) 120 graphs"
std::string format(const CriterionResult& r);

}  // namespace parthom::selftest
