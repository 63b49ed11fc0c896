#ifndef CYCLOSCHUR_SYMFUNC_HPP
#define CYCLOSCHUR_SYMFUNC_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cycloschur/partitions.hpp"
#include "cycloschur/poly.hpp"

namespace cycloschur {

// Difference alphabet x - z.  Letters are polynomials (variables or
// constants) in a common ring; `nx` is the ring's x-variable count.
struct DiffAlphabet {
  int nx;
  std::vector<Poly> plus;   // the x side
  std::vector<Poly> minus;  // the z side

  // {x_1,...,x_r} minus the empty alphabet, in the ring with r x-variables.
  static DiffAlphabet x_alphabet(int r);
};

// Coefficients of gamma^0..gamma^jmax in
//   prod_{m in minus} (1 - gamma m) * prod_{p in plus} (1 - gamma p)^{-1},
// by truncated exact series arithmetic.
std::vector<Poly> complete_series(const DiffAlphabet& a, int jmax);

// S_j(x - z): coefficient of gamma^j of the series above; 0 for j < 0.
Poly complete_diff(int j, const DiffAlphabet& a);

// S_j(x - z) with z specialized to the roots of z^n - xi^n, i.e.
// S_j(x) - xi^n S_{j-n}(x), as a polynomial in x_1..x_r and xi.
Poly complete_spec(int j, int n, int r);

// Jacobi-Trudi determinant S_lambda = det( entry(lambda_i + j - i) ) for an
// arbitrary integer vector lambda; `entry` supplies the one-row complete
// functions of the chosen difference alphabet.
Poly schur_jacobi_trudi(const IntVector& lam,
                        const std::function<Poly(int)>& entry);

// Monomial symmetric function m_mu in r variables (each distinct
// rearrangement of mu contributes one monomial with coefficient 1).
Poly monomial_sym(const Partition& mu, int r);

// m_mu over a subset of the variables of a larger ring.
Poly monomial_sym_on(const Partition& mu, const std::vector<int>& vars,
                     int nx);

// Value of m_mu at given scalars.
template <class S>
S monomial_sym_value(const Partition& mu, const std::vector<S>& xs,
                     const S& zero, const S& one) {
  std::vector<int> e = mu.padded(static_cast<int>(xs.size()));
  std::sort(e.begin(), e.end());
  S acc = zero;
  do {
    S term = one;
    for (size_t i = 0; i < xs.size(); ++i)
      if (e[i]) term = term * pow_scalar(xs[i], e[i], one);
    acc = acc + term;
  } while (std::next_permutation(e.begin(), e.end()));
  return acc;
}

// x^v pi_omega via the bialternant det(x_i^{v_j + r - j}) / Vandermonde.
// Defined for v >= (1-r, ..., -1, 0) componentwise; the result is always a
// polynomial.
Poly pi_omega(const IntVector& v);

// Same operator, computed literally: sum over all r! permutations of
// x^v * prod_{i<j} (1 - x_j/x_i)^{-1} as rational functions.
Poly pi_omega_symmetrized(const IntVector& v);

// A rational combination of terms m_mu(x) * xi^e; the natural basis for
// phi_k, the specialized Schur expansions and the diagonal factors.
class MonomialCombo {
 public:
  using MuMap = std::map<std::vector<int>, Rational, std::greater<>>;

  void add(int xi_exp, const Partition& mu, const Rational& c);
  bool empty() const { return groups_.empty(); }

  const std::map<int, MuMap>& groups() const { return groups_; }

  Poly expand(int r) const;
  // Substitutes scalars for the x variables, keeping xi symbolic; the
  // result is univariate in xi (nx = 0).
  Poly eval_x(const std::vector<Rational>& xs) const;

  template <class S, class Lift>
  S eval(const std::vector<S>& xs, const S& xiv, const S& zero, const S& one,
         Lift lift) const {
    S acc = zero;
    for (const auto& [e, mus] : groups_) {
      S group = zero;
      for (const auto& [mu, c] : mus)
        group = group + lift(c) * monomial_sym_value(Partition(mu), xs, zero,
                                                     one);
      if (e) group = group * pow_scalar(xiv, static_cast<long>(e), one);
      acc = acc + group;
    }
    return acc;
  }

  // Rendering used by the CLI: xi powers ascending, partitions in
  // decreasing lexicographic order, e.g. "m[3,3] + ξ^4·(m[2] + m[1,1])".
  std::string render() const;

  friend bool operator==(const MonomialCombo& a, const MonomialCombo& b) {
    return a.groups_ == b.groups_;
  }

 private:
  std::map<int, MuMap> groups_;
};

// phi_k: sum of all m_mu of degree k with mu_1 <= n-1 and l(mu) <= r;
// zero outside 0 <= k <= (n-1)r.
MonomialCombo phi_combo(int k, int n, int r);
Poly phi(int k, int n, int r);

// S_{(n-1)^{r-1} p}(x - z) for z the roots of z^n - xi^n, expanded in the
// monomial basis: sum over j >= 0 of phi_{N+p-nj} * xi^{nj} with
// N = (n-1)(r-1).  Requires 0 <= p <= n-1.
MonomialCombo schur_box_spec_combo(int p, int n, int r);
Poly schur_box_spec(int p, int n, int r);

}  // namespace cycloschur

#endif
