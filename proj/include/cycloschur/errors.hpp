#ifndef CYCLOSCHUR_ERRORS_HPP
#define CYCLOSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cycloschur {

// Thrown on division by zero in any exact domain (rationals, residues,
// rational functions).
struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what_arg)
      : std::domain_error(what_arg) {}
};

// Thrown when a theorem instance violates genericity (xi = 0 or
// x_k^n = xi^n).  Indices are 1-based; -1 means "not applicable".
struct DegenerateInstance : std::runtime_error {
  int k, i, j;
  DegenerateInstance(const std::string& what_arg, int k_ = -1, int i_ = -1,
                     int j_ = -1)
      : std::runtime_error(what_arg), k(k_), i(i_), j(j_) {}
};

}  // namespace cycloschur

#endif
