#include "cycloschur/symfunc.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycloschur {

DiffAlphabet DiffAlphabet::x_alphabet(int r) {
  DiffAlphabet a{r, {}, {}};
  for (int i = 0; i < r; ++i) a.plus.push_back(poly_x(r, i));
  return a;
}

std::vector<Poly> complete_series(const DiffAlphabet& a, int jmax) {
  std::vector<Poly> c(jmax + 1, Poly(a.nx));
  c[0] = poly_const(a.nx, Rational(1));
  // multiply by (1 - gamma m) for each letter of the minus side
  for (const Poly& m : a.minus)
    for (int k = jmax; k >= 1; --k) c[k] -= m * c[k - 1];
  // divide by (1 - gamma p) for each letter of the plus side
  for (const Poly& p : a.plus)
    for (int k = 1; k <= jmax; ++k) c[k] += p * c[k - 1];
  return c;
}

Poly complete_diff(int j, const DiffAlphabet& a) {
  if (j < 0) return Poly(a.nx);
  return complete_series(a, j)[j];
}

Poly complete_spec(int j, int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("complete_spec: n,r >= 1");
  if (j < 0) return Poly(r);
  auto series = complete_series(DiffAlphabet::x_alphabet(r), j);
  Poly result = series[j];
  if (j - n >= 0) {
    Poly xin = poly_xi(r).pow(n);
    result -= xin * series[j - n];
  }
  return result;
}

namespace {

Poly det_cofactor(const std::vector<std::vector<Poly>>& m, int nx) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return poly_const(nx, Rational(1));
  if (n == 1) return m[0][0];
  Poly acc(nx);
  // expand along the first row
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * det_cofactor(minor, nx);
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

}  // namespace

Poly schur_jacobi_trudi(const IntVector& lam,
                        const std::function<Poly(int)>& entry) {
  const int r = static_cast<int>(lam.size());
  if (r == 0) throw std::invalid_argument("schur_jacobi_trudi: empty index");
  std::vector<std::vector<Poly>> m(r);
  int nx = -1;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Poly e = entry(lam[i] + j - i);
      if (nx < 0) nx = e.nx();
      m[i].push_back(std::move(e));
    }
  }
  return det_cofactor(m, nx);
}

Poly monomial_sym_on(const Partition& mu, const std::vector<int>& vars,
                     int nx) {
  const int k = static_cast<int>(vars.size());
  if (mu.length() > k)
    throw std::invalid_argument("monomial_sym: partition longer than r");
  std::vector<int> e = mu.padded(k);
  std::sort(e.begin(), e.end());
  Poly acc(nx);
  std::vector<int> exps(nx + 1, 0);
  do {
    std::fill(exps.begin(), exps.end(), 0);
    for (int i = 0; i < k; ++i) exps[vars[i]] = e[i];
    acc.add_term(exps, Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return acc;
}

Poly monomial_sym(const Partition& mu, int r) {
  std::vector<int> vars(r);
  std::iota(vars.begin(), vars.end(), 0);
  return monomial_sym_on(mu, vars, r);
}

namespace {

void check_pi_omega_domain(const IntVector& v) {
  const int r = static_cast<int>(v.size());
  if (r == 0) throw std::invalid_argument("pi_omega: empty exponent vector");
  for (int i = 0; i < r; ++i)
    if (v[i] < i + 1 - r)
      throw std::invalid_argument(
          "pi_omega: exponent vector below (1-r,...,-1,0)");
}

}  // namespace

Poly pi_omega(const IntVector& v) {
  check_pi_omega_domain(v);
  const int r = static_cast<int>(v.size());
  std::vector<std::vector<Poly>> m(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<int> e(r + 1, 0);
      e[i] = v[j] + r - 1 - j;
      m[i].push_back(Poly::monomial(r, e, Rational(1)));
    }
  Poly alternant = det_cofactor(m, r);
  Poly vand = poly_const(r, Rational(1));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) vand *= poly_x(r, i) - poly_x(r, j);
  if (alternant.is_zero()) return Poly(r);
  return divide_exact(alternant, vand);
}

Poly pi_omega_symmetrized(const IntVector& v) {
  check_pi_omega_domain(v);
  const int r = static_cast<int>(v.size());
  using RF = RationalFunction<Rational>;
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  RF total(Poly(r), Rational(1));  // 0/1
  do {
    // sigma applied to x^v * prod_{i<j} x_i / (x_i - x_j)
    std::vector<int> num_exp(r + 1, 0);
    for (int i = 0; i < r; ++i) num_exp[sigma[i]] = v[i] + r - 1 - i;
    Poly num = Poly::monomial(r, num_exp, Rational(1));
    Poly den = poly_const(r, Rational(1));
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        den *= poly_x(r, sigma[i]) - poly_x(r, sigma[j]);
    total = total + RF(std::move(num), std::move(den));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (total.num().is_zero()) return Poly(r);
  return divide_exact(total.num(), total.den());
}

void MonomialCombo::add(int xi_exp, const Partition& mu, const Rational& c) {
  if (c.is_zero()) return;
  auto& slot = groups_[xi_exp][mu.parts()];
  slot += c;
  if (slot.is_zero()) {
    groups_[xi_exp].erase(mu.parts());
    if (groups_[xi_exp].empty()) groups_.erase(xi_exp);
  }
}

Poly MonomialCombo::expand(int r) const {
  Poly acc(r);
  for (const auto& [e, mus] : groups_) {
    Poly group(r);
    for (const auto& [mu, c] : mus)
      group += monomial_sym(Partition(mu), r).scaled(c);
    if (e) group *= poly_xi(r).pow(e);
    acc += group;
  }
  return acc;
}

Poly MonomialCombo::eval_x(const std::vector<Rational>& xs) const {
  Poly acc(0);
  for (const auto& [e, mus] : groups_) {
    Rational val(0);
    for (const auto& [mu, c] : mus)
      val += c * monomial_sym_value(Partition(mu), xs, Rational(0),
                                    Rational(1));
    acc.add_term({e}, val);
  }
  return acc;
}

namespace {

std::string mu_term_str(const std::vector<int>& mu, const Rational& c) {
  std::ostringstream os;
  if (mu.empty()) {
    os << c.str();
    return os.str();
  }
  if (!c.is_one()) os << c.str() << "·";
  os << "m[";
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ",";
    os << mu[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string MonomialCombo::render() const {
  if (groups_.empty()) return "0";
  std::ostringstream os;
  bool first_piece = true;
  for (const auto& [e, mus] : groups_) {
    std::ostringstream inner;
    bool first = true;
    for (const auto& [mu, c] : mus) {
      if (!first) inner << " + ";
      inner << mu_term_str(mu, c);
      first = false;
    }
    if (!first_piece) os << " + ";
    if (e == 0) {
      os << inner.str();
    } else {
      os << "ξ^" << e;
      if (mus.size() == 1 && mus.begin()->first.empty() &&
          mus.begin()->second.is_one()) {
        // bare xi power
      } else if (mus.size() == 1) {
        os << "·" << inner.str();
      } else {
        os << "·(" << inner.str() << ")";
      }
    }
    first_piece = false;
  }
  return os.str();
}

MonomialCombo phi_combo(int k, int n, int r) {
  MonomialCombo combo;
  if (k < 0 || k > (n - 1) * r) return combo;
  for (const Partition& mu : partitions_bounded(k, n - 1, r))
    combo.add(0, mu, Rational(1));
  return combo;
}

Poly phi(int k, int n, int r) { return phi_combo(k, n, r).expand(r); }

MonomialCombo schur_box_spec_combo(int p, int n, int r) {
  if (p < 0 || p > n - 1)
    throw std::invalid_argument("schur_box_spec: p out of [0, n-1]");
  const int N = (n - 1) * (r - 1);
  MonomialCombo combo;
  for (int j = 0; N + p - n * j >= 0; ++j)
    for (const Partition& mu : partitions_bounded(N + p - n * j, n - 1, r))
      combo.add(n * j, mu, Rational(1));
  return combo;
}

Poly schur_box_spec(int p, int n, int r) {
  return schur_box_spec_combo(p, n, r).expand(r);
}

}  // namespace cycloschur
