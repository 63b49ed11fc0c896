#ifndef CYCLOSCHUR_POLY_HPP
#define CYCLOSCHUR_POLY_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "cycloschur/rational.hpp"

namespace cycloschur {

template <class S>
S pow_scalar(S base, long e, const S& one) {
  if (e < 0) throw std::invalid_argument("pow_scalar: negative exponent");
  S acc = one;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// Sparse multivariate polynomial in x_1..x_nx and xi, with coefficients in
// an exact field K (K must provide is_zero(), str() and ring operators).
// Exponent vectors have length nx+1; the last slot is the xi exponent.
// No stored term has a zero coefficient, so structural equality is
// polynomial equality.
template <class K>
class MultiPoly {
 public:
  using Terms = std::map<std::vector<int>, K>;

  explicit MultiPoly(int nx) : nx_(nx) {}

  static MultiPoly monomial(int nx, std::vector<int> exps, K coeff) {
    if (static_cast<int>(exps.size()) != nx + 1)
      throw std::invalid_argument("monomial: exponent vector arity mismatch");
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    MultiPoly p(nx);
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
  }
  static MultiPoly constant(int nx, K c) {
    return monomial(nx, std::vector<int>(nx + 1, 0), std::move(c));
  }
  // x_i, 0-based index among the x variables.
  static MultiPoly x_var(int nx, int i, K one) {
    if (i < 0 || i >= nx) throw std::invalid_argument("x_var: index");
    std::vector<int> e(nx + 1, 0);
    e[i] = 1;
    return monomial(nx, std::move(e), std::move(one));
  }
  static MultiPoly xi_var(int nx, K one) {
    std::vector<int> e(nx + 1, 0);
    e[nx] = 1;
    return monomial(nx, std::move(e), std::move(one));
  }

  int nx() const { return nx_; }
  int arity() const { return nx_ + 1; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      if (s > d) d = s;
    }
    return d;
  }

  void add_term(const std::vector<int>& exps, const K& coeff) {
    if (static_cast<int>(exps.size()) != nx_ + 1)
      throw std::invalid_argument("add_term: arity mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (!coeff.is_zero()) terms_.emplace(exps, coeff);
    } else {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(nx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, K(-c));
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, K(-c));
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.nx_);
    std::vector<int> e(a.nx_ + 1);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i <= a.nx_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const K& c) const {
    MultiPoly r(nx_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  MultiPoly pow(long e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative");
    if (e == 0) {
      if (terms_.empty())
        throw std::invalid_argument("MultiPoly::pow: 0^0 without unit");
      const K& c = terms_.begin()->second;
      return constant(nx_, c * c.inv());
    }
    MultiPoly acc = *this;
    for (long i = 1; i < e; ++i) acc *= *this;
    return acc;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nx_ == b.nx_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  // Full evaluation: substitutes xs[i] for x_i and xiv for xi, lifting
  // each coefficient through `lift` (K -> S).
  template <class S, class Lift>
  S eval(const std::vector<S>& xs, const S& xiv, const S& zero, const S& one,
         Lift lift) const {
    if (static_cast<int>(xs.size()) != nx_)
      throw std::invalid_argument("eval: wrong number of x values");
    S acc = zero;
    for (const auto& [e, c] : terms_) {
      S t = lift(c);
      for (int i = 0; i < nx_; ++i)
        if (e[i]) t = t * pow_scalar(xs[i], e[i], one);
      if (e[nx_]) t = t * pow_scalar(xiv, e[nx_], one);
      acc = acc + t;
    }
    return acc;
  }

  // Substitutes a scalar for one variable (0..nx-1 for x_i, nx for xi);
  // remaining variables keep their exponents.  Coefficients are lifted
  // into S, so the result may live over a larger field.
  template <class S, class Lift>
  MultiPoly<S> substitute(int var, const S& value, const S& one,
                          Lift lift) const {
    if (var < 0 || var > nx_) throw std::invalid_argument("substitute: var");
    MultiPoly<S> r(nx_);
    std::vector<int> e;
    for (const auto& [exps, c] : terms_) {
      e = exps;
      S coeff = lift(c);
      if (e[var]) coeff = coeff * pow_scalar(value, e[var], one);
      e[var] = 0;
      r.add_term(e, coeff);
    }
    return r;
  }

  // Substitutes values for every x variable, keeping xi symbolic; the
  // result is a univariate polynomial in xi (nx = 0).
  MultiPoly eval_x(const std::vector<K>& xs, const K& one) const {
    if (static_cast<int>(xs.size()) != nx_)
      throw std::invalid_argument("eval_x: wrong number of x values");
    MultiPoly r(0);
    for (const auto& [e, c] : terms_) {
      K coeff = c;
      for (int i = 0; i < nx_; ++i)
        if (e[i]) coeff = coeff * pow_scalar(xs[i], e[i], one);
      r.add_term({e[nx_]}, coeff);
    }
    return r;
  }

  template <class S, class Lift>
  MultiPoly<S> map_coeffs(Lift lift) const {
    MultiPoly<S> r(nx_);
    for (const auto& [e, c] : terms_) r.add_term(e, lift(c));
    return r;
  }

  // Canonical rendering: terms in decreasing lexicographic exponent order,
  // variables named x1..x<nx>, xi.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      append_term(os, e, c, first);
      first = false;
    }
    return os.str();
  }

 private:
  template <class K2>
  friend class MultiPoly;

  void check_arity(const MultiPoly& o) const {
    if (nx_ != o.nx_)
      throw std::invalid_argument("polynomial arity mismatch");
  }

  void append_term(std::ostringstream& os, const std::vector<int>& e,
                   const K& c, bool first) const {
    bool mono = false;
    std::ostringstream ms;
    for (int i = 0; i <= nx_; ++i) {
      if (!e[i]) continue;
      if (mono) ms << "*";
      if (i < nx_)
        ms << "x" << (i + 1);
      else
        ms << "xi";
      if (e[i] > 1) ms << "^" << e[i];
      mono = true;
    }
    if constexpr (std::is_same_v<K, Rational>) {
      Rational a = c;
      if (first) {
        if (a.sign() < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a.sign() < 0 ? " - " : " + ");
        a = a.abs();
      }
      if (!mono) {
        os << a.str();
        return;
      }
      if (!a.is_one()) os << a.str() << "*";
      os << ms.str();
    } else {
      if (!first) os << " + ";
      os << c.str();
      if (mono) os << "*" << ms.str();
    }
  }

  int nx_;
  Terms terms_;
};

using Poly = MultiPoly<Rational>;

inline Poly poly_const(int nx, const Rational& c) {
  return Poly::constant(nx, c);
}
inline Poly poly_x(int nx, int i) { return Poly::x_var(nx, i, Rational(1)); }
inline Poly poly_xi(int nx) { return Poly::xi_var(nx, Rational(1)); }

// Single-divisor exact division in the lexicographic term order; throws
// std::invalid_argument when the divisor does not divide the dividend.
template <class K>
MultiPoly<K> divide_exact(const MultiPoly<K>& num, const MultiPoly<K>& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.nx() != den.nx())
    throw std::invalid_argument("divide_exact: arity mismatch");
  MultiPoly<K> rem = num, quot(num.nx());
  const auto& dlead = *den.terms().rbegin();
  const K dlead_inv = dlead.second.inv();
  std::vector<int> e(num.nx() + 1);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    bool divisible = true;
    for (int i = 0; i <= num.nx(); ++i) {
      e[i] = rlead.first[i] - dlead.first[i];
      if (e[i] < 0) divisible = false;
    }
    if (!divisible)
      throw std::invalid_argument("divide_exact: inexact division");
    MultiPoly<K> qt =
        MultiPoly<K>::monomial(num.nx(), e, rlead.second * dlead_inv);
    quot += qt;
    rem -= qt * den;
  }
  return quot;
}

// Quotient of two polynomials; equality is decided by cross-multiplication.
template <class K>
class RationalFunction {
 public:
  RationalFunction(MultiPoly<K> num, MultiPoly<K> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw DivisionByZero("rational function with zero denominator");
    if (num_.nx() != den_.nx())
      throw std::invalid_argument("rational function arity mismatch");
  }
  // Builds num / 1; `one` supplies the unit of K (fields like Q(zeta_n)
  // cannot produce it out of thin air).
  RationalFunction(const MultiPoly<K>& num, const K& one)
      : RationalFunction(num, MultiPoly<K>::constant(num.nx(), one)) {}

  const MultiPoly<K>& num() const { return num_; }
  const MultiPoly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_,
                            a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_,
                            a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const {
    return RationalFunction(-num_, den_);
  }

  friend bool operator==(const RationalFunction& a,
                         const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a,
                         const RationalFunction& b) {
    return !(a == b);
  }

  std::string str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  MultiPoly<K> num_, den_;
};

}  // namespace cycloschur

#endif
