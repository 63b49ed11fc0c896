#ifndef CYCLOSCHUR_IDENTITY_HPP
#define CYCLOSCHUR_IDENTITY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cycloschur/backends.hpp"
#include "cycloschur/errors.hpp"
#include "cycloschur/matrix.hpp"
#include "cycloschur/symfunc.hpp"

namespace cycloschur {

enum class BackendKind { exact, floating };

// One instance of the theorem check: y is specialized to the roots of
// y^n - 1 and z to the roots of z^n - xi^n; x stays a list of rationals
// (or symbolic indeterminates).
struct TheoremInstance {
  int n = 1;
  int r = 1;
  std::vector<Rational> x_values;
  Rational xi = Rational(1);
  BackendKind backend = BackendKind::exact;
  bool symbolic = false;

  // Checks n,r >= 1, xi != 0 and the genericity condition x_k^n != xi^n
  // (which guarantees every matrix denominator x_k y_i - z_j is nonzero).
  void validate() const;
};

struct VerificationReport {
  TheoremInstance instance;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  int observed_sign = 0;  // +1 / -1, or 0 when undetermined
  int expected_sign = 0;
  std::vector<std::string> diagnostics;
  double elapsed_ms = 0.0;
  // Filled only under the strict-printed-form flag: the literal
  // det * Delta(y) * Delta(z) reading of the statement.
  bool printed_form_computed = false;
  std::string lhs_printed;
  bool equal_printed = false;
};

// Exponent of the theorem's sign (-1)^{(n-1)n/2 + (n-1)(r-1)}.
int sign_exponent(int n, int r);

// phi-series of one Gaudin column: pairs (t, N+j-tn) for t >= 0 while the
// index stays non-negative, with N = (n-1)(r-1).
std::vector<std::pair<int, int>> box_series_indices(int n, int r, int j);

// Sum over the series above of phi_{N+i-tn} * xi^{tn} (the i-th diagonal
// factor), in the monomial basis and expanded.
MonomialCombo diagonal_factor_combo(int i, int n, int r);
Poly diagonal_factor(int i, int n, int r);

// prod_{i=0}^{n-1} (n-i + i*xi^n): the factorized value at x = (1,1).
Poly scott_han_product(int n);

// det[(y_i-z_j)^{-2}] = det[(y_i-z_j)^{-1}] * perm[(y_i-z_j)^{-1}], checked
// exactly over the rationals.
bool borchardt_check(const std::vector<Rational>& y,
                     const std::vector<Rational>& z);

// ---------------------------------------------------------------------
// Generic (backend-templated) building blocks.
// ---------------------------------------------------------------------

// prod_{i<j} (v_i - v_j), in this index order; empty and singleton lists
// give 1.
template <class S>
S vandermonde(const std::vector<S>& v, const S& one) {
  S acc = one;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) acc = acc * (v[i] - v[j]);
  return acc;
}

// Canonical root lists: y_i = zeta^{i-1}, z_j = xi * zeta^{j-1}, i,j = 1..n.
template <class B>
std::vector<typename B::scalar> unity_roots(const B& b, int n) {
  std::vector<typename B::scalar> ys;
  ys.reserve(n);
  for (int i = 0; i < n; ++i) ys.push_back(b.zeta_pow(i));
  return ys;
}

template <class B>
std::vector<typename B::scalar> xi_roots(const B& b, int n,
                                         const Rational& xi) {
  std::vector<typename B::scalar> zs;
  zs.reserve(n);
  const auto xiv = b.from_rational(xi);
  for (int j = 0; j < n; ++j) zs.push_back(xiv * b.zeta_pow(j));
  return zs;
}

template <class B>
std::vector<typename B::scalar> lift_values(const B& b,
                                            const std::vector<Rational>& v) {
  std::vector<typename B::scalar> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(b.from_rational(q));
  return out;
}

// The n x n matrix with entry (i,j) = prod_k (x_k y_i - z_j)^{-1}.
template <class B>
Matrix<typename B::scalar> generalized_cauchy_matrix(
    const B& b, const std::vector<Rational>& x,
    const std::vector<typename B::scalar>& ys,
    const std::vector<typename B::scalar>& zs) {
  using S = typename B::scalar;
  const int n = static_cast<int>(ys.size());
  const auto xv = lift_values(b, x);
  Matrix<S> m(n, b.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S prod = b.one();
      for (size_t k = 0; k < xv.size(); ++k) {
        S factor = xv[k] * ys[i] - zs[j];
        if (B::is_zero(factor))
          throw DegenerateInstance("x_k y_i - z_j vanishes",
                                   static_cast<int>(k) + 1, i + 1, j + 1);
        prod = prod * factor;
      }
      m.at(i, j) = b.one() / prod;
    }
  return m;
}

// det / (Delta(y) Delta(z)); invariant under reordering of either root
// list since the determinant's sign change cancels against the Vandermonde.
template <class B>
typename B::scalar theorem_lhs_for_roots(
    const B& b, const std::vector<Rational>& x,
    const std::vector<typename B::scalar>& ys,
    const std::vector<typename B::scalar>& zs) {
  auto det = field_det(generalized_cauchy_matrix(b, x, ys, zs));
  return det / (vandermonde(ys, b.one()) * vandermonde(zs, b.one()));
}

template <class B>
typename B::scalar theorem_lhs(const TheoremInstance& inst, const B& b) {
  return theorem_lhs_for_roots(b, inst.x_values, unity_roots(b, inst.n),
                               xi_roots(b, inst.n, inst.xi));
}

// The literal det * Delta(y) * Delta(z) reading of the printed statement.
template <class B>
typename B::scalar theorem_lhs_printed(const TheoremInstance& inst,
                                       const B& b) {
  const auto ys = unity_roots(b, inst.n);
  const auto zs = xi_roots(b, inst.n, inst.xi);
  auto det = field_det(generalized_cauchy_matrix(b, inst.x_values, ys, zs));
  return det * vandermonde(ys, b.one()) * vandermonde(zs, b.one());
}

// Values phi_k(x) for k = 0..(n-1)r in the backend's field.
template <class B>
std::vector<typename B::scalar> phi_values(const B& b, int n, int r,
                                           const std::vector<Rational>& x) {
  using S = typename B::scalar;
  const auto xv = lift_values(b, x);
  std::vector<S> vals;
  const int kmax = (n - 1) * r;
  vals.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    vals.push_back(phi_combo(k, n, r).eval(
        xv, b.one(), b.zero(), b.one(),
        [&](const Rational& q) { return b.from_rational(q); }));
  return vals;
}

// The i-th diagonal factor sum_{t} phi_{N+i-tn}(x) xi^{tn}, evaluated.
template <class B>
typename B::scalar diagonal_value(const B& b, int i, int n, int r,
                                  const std::vector<typename B::scalar>& phis,
                                  const Rational& xi) {
  using S = typename B::scalar;
  const auto xiv = b.from_rational(xi);
  S acc = b.zero();
  for (auto [t, idx] : box_series_indices(n, r, i))
    acc = acc + pow_scalar(xiv, static_cast<long>(t) * n, b.one()) *
                    phis[idx];
  return acc;
}

// RHS magnitude prod_i diag_i / prod_k (x_k^n - xi^n)^n, without the sign.
template <class B>
typename B::scalar theorem_rhs_magnitude(const TheoremInstance& inst,
                                         const B& b) {
  using S = typename B::scalar;
  const auto phis = phi_values(b, inst.n, inst.r, inst.x_values);
  S num = b.one();
  for (int i = 0; i < inst.n; ++i)
    num = num * diagonal_value(b, i, inst.n, inst.r, phis, inst.xi);
  S den = b.one();
  const S xin = pow_scalar(b.from_rational(inst.xi),
                           static_cast<long>(inst.n), b.one());
  for (const auto& q : inst.x_values) {
    S xkn = pow_scalar(b.from_rational(q), static_cast<long>(inst.n),
                       b.one());
    den = den * pow_scalar(xkn - xin, static_cast<long>(inst.n), b.one());
  }
  return num / den;
}

template <class B>
typename B::scalar theorem_rhs(const TheoremInstance& inst, const B& b) {
  auto mag = theorem_rhs_magnitude(inst, b);
  return sign_exponent(inst.n, inst.r) % 2 ? b.zero() - mag : mag;
}

// Entry (i,j) = S_{(n-1)^{r-1}, j}(y_i x - z) via Jacobi-Trudi over the
// scalar field, substituting x_m -> y_i x_m and xi into the specialized
// complete functions.
template <class B>
Matrix<typename B::scalar> gaudin_matrix(const TheoremInstance& inst,
                                         const B& b) {
  using S = typename B::scalar;
  const int n = inst.n, r = inst.r;
  const auto ys = unity_roots(b, n);
  const auto xv = lift_values(b, inst.x_values);
  const S xiv = b.from_rational(inst.xi);
  auto lift = [&](const Rational& q) { return b.from_rational(q); };

  std::map<int, Poly> spec_cache;
  auto spec = [&](int k) -> const Poly& {
    auto it = spec_cache.find(k);
    if (it == spec_cache.end())
      it = spec_cache.emplace(k, complete_spec(k, n, r)).first;
    return it->second;
  };

  Matrix<S> g(n, b.zero());
  for (int i = 0; i < n; ++i) {
    std::vector<S> sx;  // y_i * x
    sx.reserve(r);
    for (const auto& v : xv) sx.push_back(ys[i] * v);
    for (int j = 0; j < n; ++j) {
      IntVector lam(r, n - 1);
      lam.back() = j;
      Matrix<S> jt(r, b.zero());
      for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c)
          jt.at(a, c) = spec(lam[a] + c - a).eval(sx, xiv, b.zero(), b.one(),
                                                  lift);
      g.at(i, j) = field_det(jt);
    }
  }
  return g;
}

// Same matrix from the phi-series expansion: entry (i,j) =
// sum_t xi^{tn} y_i^{N+j-tn} phi_{N+j-tn}(x).
template <class B>
Matrix<typename B::scalar> gaudin_matrix_phi(const TheoremInstance& inst,
                                             const B& b) {
  using S = typename B::scalar;
  const int n = inst.n, r = inst.r;
  const auto ys = unity_roots(b, n);
  const auto phis = phi_values(b, n, r, inst.x_values);
  const S xiv = b.from_rational(inst.xi);
  Matrix<S> g(n, b.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S acc = b.zero();
      for (auto [t, idx] : box_series_indices(n, r, j))
        acc = acc + pow_scalar(xiv, static_cast<long>(t) * n, b.one()) *
                        pow_scalar(ys[i], static_cast<long>(idx), b.one()) *
                        phis[idx];
      g.at(i, j) = acc;
    }
  return g;
}

// [ y_i^{(N+j) mod n} ]: the power matrix of the factorization.
template <class B>
Matrix<typename B::scalar> power_matrix(const TheoremInstance& inst,
                                        const B& b) {
  using S = typename B::scalar;
  const int n = inst.n;
  const int N = (inst.n - 1) * (inst.r - 1);
  const auto ys = unity_roots(b, n);
  Matrix<S> p(n, b.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.at(i, j) = pow_scalar(ys[i], (N + j) % n, b.one());
  return p;
}

// G = det(D) * prod_{x,y,z} (xy - z) / Delta(z), computed directly.
template <class B>
typename B::scalar gaudin_direct(const TheoremInstance& inst, const B& b) {
  using S = typename B::scalar;
  const auto ys = unity_roots(b, inst.n);
  const auto zs = xi_roots(b, inst.n, inst.xi);
  const auto xv = lift_values(b, inst.x_values);
  S det = field_det(generalized_cauchy_matrix(b, inst.x_values, ys, zs));
  S prod = b.one();
  for (const auto& x : xv)
    for (const auto& y : ys)
      for (const auto& z : zs) prod = prod * (x * y - z);
  return det * prod / vandermonde(zs, b.one());
}

// prod_{x,y,z} (xy - z) over the specialized roots.
template <class B>
typename B::scalar normalization_product(const TheoremInstance& inst,
                                         const B& b) {
  using S = typename B::scalar;
  const auto ys = unity_roots(b, inst.n);
  const auto zs = xi_roots(b, inst.n, inst.xi);
  S prod = b.one();
  for (const auto& q : inst.x_values) {
    const S x = b.from_rational(q);
    for (const auto& y : ys)
      for (const auto& z : zs) prod = prod * (x * y - z);
  }
  return prod;
}

// ---------------------------------------------------------------------
// Top-level verification.
// ---------------------------------------------------------------------

VerificationReport verify_theorem(const TheoremInstance& inst,
                                  bool strict_printed_form = false);

}  // namespace cycloschur

#endif
