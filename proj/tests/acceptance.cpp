// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.
#include <iostream>

#include "cycloschur/selfcheck.hpp"

int main() {
  using namespace cycloschur::selfcheck;
  Options opt;  // fixed default seed; criteria pin their own ranges
  const auto results = run_acceptance(opt);
  print_results(std::cout, results, /*with_timing=*/true);
  const bool ok = all_pass(results);
  std::cout << (ok ? "ACCEPTANCE: all criteria passed"
                   : "ACCEPTANCE: FAILURES PRESENT")
            << "\n";
  return ok ? 0 : 1;
}
