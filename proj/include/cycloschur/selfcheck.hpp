#ifndef CYCLOSCHUR_SELFCHECK_HPP
#define CYCLOSCHUR_SELFCHECK_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "cycloschur/identity.hpp"

namespace cycloschur {
namespace selfcheck {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;      // summary, or the first failing case
  double elapsed_ms = 0.0;
  double limit_ms = 0.0;   // 0 = no stated budget
};

// Deterministic across platforms (plain modulo reduction, no
// distribution objects).
int rand_int(std::mt19937_64& rng, int lo, int hi);
Rational random_rational(std::mt19937_64& rng, int max_abs,
                         bool nonzero = false);

// Random admissible instance: numerators and denominators bounded by 20,
// xi nonzero, genericity x_k^n != xi^n enforced by resampling.
TheoremInstance random_instance(std::mt19937_64& rng, int n, int r,
                                BackendKind backend);

// Reproductions of the printed displays, one result per display group.
std::vector<CheckResult> worked_example_checks();

CheckResult check_worked_examples();                                  // 1
CheckResult check_theorem_sweep(uint64_t seed, BackendKind backend); // 2
CheckResult check_proposition_oracle();                              // 3
CheckResult check_gaudin_cross(uint64_t seed, BackendKind backend);  // 4
CheckResult check_factorization(uint64_t seed, BackendKind backend); // 5
CheckResult check_borchardt(uint64_t seed);                          // 6
CheckResult check_pi_omega();                                        // 7
CheckResult check_backend_agreement(uint64_t seed);                  // 8
CheckResult check_sign_audit(uint64_t seed);                         // 9

struct Options {
  uint64_t seed = 20260810;
  bool float_variants = false;
};

// The nine acceptance checks in order; with float_variants, the matrix
// checks (2, 4, 5) run again under the float backend at 1e-9 relative.
std::vector<CheckResult> run_acceptance(const Options& opt);

// One line per check; timings are optional so seeded runs can promise
// byte-identical output.
void print_results(std::ostream& os, const std::vector<CheckResult>& results,
                   bool with_timing);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace selfcheck
}  // namespace cycloschur

#endif
