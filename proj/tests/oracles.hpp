// Test-only oracles, deliberately independent of the library's
// implementations: brute-force permutation expansions for determinant and
// permanent.
#ifndef CYCLOSCHUR_TESTS_ORACLES_HPP
#define CYCLOSCHUR_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "cycloschur/matrix.hpp"

namespace oracles {

template <class S>
S naive_det(const cycloschur::Matrix<S>& m, const S& zero) {
  const int n = m.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  S total = zero;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    S prod = m.at(0, p[0]);
    for (int i = 1; i < n; ++i) prod = prod * m.at(i, p[i]);
    total = inv % 2 ? total - prod : total + prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

template <class S>
S naive_permanent(const cycloschur::Matrix<S>& m, const S& zero) {
  const int n = m.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  S total = zero;
  do {
    S prod = m.at(0, p[0]);
    for (int i = 1; i < n; ++i) prod = prod * m.at(i, p[i]);
    total = total + prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace oracles

#endif
