// Runs every acceptance criterion once and prints one line per criterion.
// Band misses count as failures here; the CLI reports them separately.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "fcensus/verify.hpp"

int main(int argc, char** argv) {
  fcensus::VerifyOptions options;
  if (const char* w = std::getenv("FCENSUS_WORKERS")) options.workers = static_cast<unsigned>(std::atoi(w));
  if (argc > 1) options.seed = std::stoull(argv[1]);

  int failed = 0;
  const auto& ids = fcensus::acceptance_check_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const fcensus::VerifyOutcome o = fcensus::run_check(ids[i], options);
    const bool pass = o.status == fcensus::VerifyStatus::kPass;
    std::printf("[%2zu] %-4s %-32s %9.1f ms  (%s)\n", i + 1, pass ? "PASS" : "FAIL", o.id.c_str(), o.elapsed_ms,
                o.tolerance.c_str());
    if (!pass) {
      ++failed;
      std::printf("       observed: %s\n       expected: %s\n", o.observed.dump().c_str(), o.expected.dump().c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%zu/%zu acceptance criteria passed\n", ids.size() - failed, ids.size());
  return failed == 0 ? 0 : 1;
}
