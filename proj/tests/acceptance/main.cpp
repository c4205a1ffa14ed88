// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "embhom/checks/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : embhom::checks::kDefaultSeed;
  int failed = 0;
  for (const auto& r : embhom::checks::run_all(seed)) {
    std::printf("criterion %2d %-30s %s  (%.2f s)  %s\n", r.id, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
