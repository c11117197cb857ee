// Release gate: runs every verification suite and prints one line per
// criterion.  Exit 0 only when all ten pass.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "kloverify/verify.hpp"

int main(int argc, char** argv) {
  int shards = 4;
  if (argc > 1) shards = std::atoi(argv[1]);
  if (shards < 1) shards = 1;

  const auto results = kloverify::run_suites("all", shards);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %d (%s): %s\n", r.pass ? "PASS" : "FAIL", r.criterion,
                r.name.c_str(), r.detail.c_str());
    std::fprintf(stderr, "# criterion %d took %.1fs\n", r.criterion, r.seconds);
    if (r.pass) ++passed;
  }
  const bool all_pass = passed == results.size();
  std::printf("%s: %zu/%zu criteria\n", all_pass ? "ACCEPTED" : "REJECTED", passed,
              results.size());
  return all_pass ? 0 : 1;
}
