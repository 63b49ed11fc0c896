#include "cycloschur/identity.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycloschur {

void TheoremInstance::validate() const {
  if (n < 1 || r < 1)
    throw std::invalid_argument("theorem instance requires n, r >= 1");
  if (symbolic) {
    if (backend != BackendKind::exact)
      throw std::invalid_argument("symbolic mode requires the exact backend");
    if (n > 3 || r > 3)
      throw std::invalid_argument("symbolic mode is capped at n <= 3, r <= 3");
    return;
  }
  if (static_cast<int>(x_values.size()) != r)
    throw std::invalid_argument("theorem instance needs exactly r x-values");
  if (xi.is_zero())
    throw DegenerateInstance("xi must be nonzero (z-roots collapse)");
  const Rational xin = xi.pow(static_cast<unsigned long>(n));
  for (int k = 0; k < r; ++k)
    if (x_values[k].pow(static_cast<unsigned long>(n)) == xin)
      throw DegenerateInstance(
          "x_" + std::to_string(k + 1) +
              "^n = xi^n makes a matrix denominator vanish",
          k + 1);
}

int sign_exponent(int n, int r) { return (n - 1) * n / 2 + (n - 1) * (r - 1); }

std::vector<std::pair<int, int>> box_series_indices(int n, int r, int j) {
  std::vector<std::pair<int, int>> out;
  const int N = (n - 1) * (r - 1);
  for (int t = 0; N + j - t * n >= 0; ++t) out.emplace_back(t, N + j - t * n);
  return out;
}

MonomialCombo diagonal_factor_combo(int i, int n, int r) {
  if (i < 0 || i > n - 1)
    throw std::invalid_argument("diagonal_factor: index out of [0, n-1]");
  MonomialCombo combo;
  for (auto [t, idx] : box_series_indices(n, r, i))
    for (const Partition& mu : partitions_bounded(idx, n - 1, r))
      combo.add(t * n, mu, Rational(1));
  return combo;
}

Poly diagonal_factor(int i, int n, int r) {
  return diagonal_factor_combo(i, n, r).expand(r);
}

Poly scott_han_product(int n) {
  if (n < 1) throw std::invalid_argument("scott_han_product: n >= 1");
  Poly acc = poly_const(0, Rational(1));
  for (int i = 0; i < n; ++i) {
    Poly factor = poly_const(0, Rational(n - i));
    factor.add_term({n}, Rational(i));
    acc *= factor;
  }
  return acc;
}

bool borchardt_check(const std::vector<Rational>& y,
                     const std::vector<Rational>& z) {
  const int n = static_cast<int>(y.size());
  if (n == 0 || z.size() != y.size())
    throw std::invalid_argument("borchardt_check: lists of equal size >= 1");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j && (y[i] == y[j] || z[i] == z[j]))
        throw std::invalid_argument("borchardt_check: repeated value");
      if (y[i] == z[j])
        throw std::invalid_argument("borchardt_check: y meets z");
    }
  Matrix<Rational> cauchy(n, Rational(0)), squared(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational d = (y[i] - z[j]).inv();
      cauchy.at(i, j) = d;
      squared.at(i, j) = d * d;
    }
  return field_det(squared) ==
         field_det(cauchy) * ryser_permanent(cauchy);
}

namespace {

int printed_sign(int n, int r) { return sign_exponent(n, r) % 2 ? -1 : 1; }

template <class B>
void run_scalar(const TheoremInstance& inst, const B& b,
                VerificationReport& rep, bool strict) {
  using S = typename B::scalar;
  const auto ys = unity_roots(b, inst.n);
  const auto zs = xi_roots(b, inst.n, inst.xi);

  const S lhs = theorem_lhs_for_roots(b, inst.x_values, ys, zs);
  const S mag = theorem_rhs_magnitude(inst, b);
  const S rhs = printed_sign(inst.n, inst.r) < 0 ? b.zero() - mag : mag;

  rep.lhs = B::str(lhs);
  rep.rhs = B::str(rhs);
  rep.equal = B::equal(lhs, rhs);
  if (B::is_zero(mag))
    rep.observed_sign = 0;
  else if (B::equal(lhs, mag))
    rep.observed_sign = 1;
  else if (B::equal(lhs, b.zero() - mag))
    rep.observed_sign = -1;
  else
    rep.observed_sign = 0;

  const auto phis = phi_values(b, inst.n, inst.r, inst.x_values);
  for (int i = 0; i < inst.n; ++i)
    rep.diagnostics.push_back(
        "diag[" + std::to_string(i) + "] = " +
        B::str(diagonal_value(b, i, inst.n, inst.r, phis, inst.xi)));
  rep.diagnostics.push_back("Delta(y) = " + B::str(vandermonde(ys, b.one())));
  rep.diagnostics.push_back("Delta(z) = " + B::str(vandermonde(zs, b.one())));

  if (strict) {
    const S printed = theorem_lhs_printed(inst, b);
    rep.printed_form_computed = true;
    rep.lhs_printed = B::str(printed);
    rep.equal_printed = B::equal(printed, rhs);
  }
}

using CPoly = MultiPoly<CycloElem>;
using CRF = RationalFunction<CycloElem>;

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

std::string rf_str(const CRF& f) {
  const size_t total = f.num().term_count() + f.den().term_count();
  if (total <= 64) return f.str();
  std::ostringstream os;
  os << "(rational function: " << f.num().term_count() << "-term numerator / "
     << f.den().term_count() << "-term denominator)";
  return os.str();
}

void run_symbolic(const TheoremInstance& inst, VerificationReport& rep,
                  bool strict) {
  const int n = inst.n, r = inst.r;
  ExactBackend b(n);
  const CycloElem cone = b.one();
  auto lift = [&](const Rational& q) { return b.from_rational(q); };

  // d[i][j] = prod_k (x_k zeta^i - xi zeta^j), a polynomial in x and xi.
  std::vector<std::vector<CPoly>> d(n, std::vector<CPoly>(n, CPoly(r)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CPoly prod = CPoly::constant(r, cone);
      for (int k = 0; k < r; ++k) {
        CPoly factor = CPoly::x_var(r, k, b.zeta_pow(i));
        factor -= CPoly::xi_var(r, b.zeta_pow(j));
        prod *= factor;
      }
      d[i][j] = std::move(prod);
    }

  // det[1/d_ij] = (sum_sigma sgn prod_i prod_{j != sigma(i)} d_ij) / prod d_ij
  CPoly det_num(r);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    CPoly term = CPoly::constant(r, cone);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != sigma[i]) term *= d[i][j];
    if (permutation_sign(sigma) < 0)
      det_num -= term;
    else
      det_num += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CPoly det_den = CPoly::constant(r, cone);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) det_den *= d[i][j];

  // Delta(y) is a cyclotomic constant; Delta(z) = xi^{n(n-1)/2} * Delta(zeta).
  const auto ys = unity_roots(b, n);
  const CycloElem delta_y = vandermonde(ys, cone);
  CycloElem delta_zeta = cone;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      delta_zeta = delta_zeta * (b.zeta_pow(i) - b.zeta_pow(j));
  std::vector<int> e(r + 1, 0);
  e[r] = n * (n - 1) / 2;
  const CPoly delta_z = CPoly::monomial(r, e, delta_zeta);

  CRF lhs(det_num, det_den * delta_z.scaled(delta_y));

  // RHS: sign * prod_i diag_i(x, xi) / prod_k (x_k^n - xi^n)^n.
  CPoly rhs_num = CPoly::constant(r, cone);
  for (int i = 0; i < n; ++i)
    rhs_num *= diagonal_factor(i, n, r).map_coeffs<CycloElem>(lift);
  CPoly rhs_den = CPoly::constant(r, cone);
  for (int k = 0; k < r; ++k) {
    std::vector<int> xk(r + 1, 0), xe(r + 1, 0);
    xk[k] = n;
    xe[r] = n;
    CPoly factor = CPoly::monomial(r, xk, cone) -
                   CPoly::monomial(r, xe, cone);
    rhs_den *= factor.pow(n);
  }
  const CRF mag(rhs_num, rhs_den);
  const CRF rhs = printed_sign(n, r) < 0 ? -mag : mag;

  rep.lhs = rf_str(lhs);
  rep.rhs = rf_str(rhs);
  rep.equal = (lhs == rhs);
  if (mag.is_zero())
    rep.observed_sign = 0;
  else if (lhs == mag)
    rep.observed_sign = 1;
  else if (lhs == -mag)
    rep.observed_sign = -1;
  else
    rep.observed_sign = 0;

  for (int i = 0; i < n; ++i)
    rep.diagnostics.push_back("diag[" + std::to_string(i) +
                              "] = " + diagonal_factor_combo(i, n, r).render());
  rep.diagnostics.push_back("Delta(y) = " + delta_y.str());
  rep.diagnostics.push_back("Delta(z) = " + delta_z.str());

  if (strict) {
    // det * Delta(y) * Delta(z)
    CRF printed(det_num * delta_z.scaled(delta_y), det_den);
    rep.printed_form_computed = true;
    rep.lhs_printed = rf_str(printed);
    rep.equal_printed = (printed == rhs);
  }
}

}  // namespace

VerificationReport verify_theorem(const TheoremInstance& inst,
                                  bool strict_printed_form) {
  inst.validate();
  VerificationReport rep;
  rep.instance = inst;
  rep.expected_sign = printed_sign(inst.n, inst.r);
  const auto start = std::chrono::steady_clock::now();
  if (inst.symbolic) {
    run_symbolic(inst, rep, strict_printed_form);
  } else if (inst.backend == BackendKind::exact) {
    run_scalar(inst, ExactBackend(inst.n), rep, strict_printed_form);
  } else {
    run_scalar(inst, FloatBackend(inst.n), rep, strict_printed_form);
  }
  const auto stop = std::chrono::steady_clock::now();
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return rep;
}

}  // namespace cycloschur
