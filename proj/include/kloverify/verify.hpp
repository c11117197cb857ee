#pragma once

#include <string>
#include <vector>

namespace kloverify {

// One verification suite = one release-gate criterion; names describe the
// mathematical content being checked.
struct SuiteResult {
  int criterion = 0;       // 1-based position in the release gate
  std::string name;
  bool pass = false;
  std::string detail;      // what was covered, or the first failure
  double seconds = 0.0;
};

// the ten suites, in release-gate order
const std::vector<std::string>& suite_names();

// Run one suite by name, or every suite with "all".  Failures are captured
// in the results (exceptions become failing results), never thrown.
std::vector<SuiteResult> run_suites(const std::string& which, int shards = 1);

}  // namespace kloverify
