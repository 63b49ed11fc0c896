#ifndef CYCLOSCHUR_CYCLOTOMIC_HPP
#define CYCLOSCHUR_CYCLOTOMIC_HPP

#include <memory>
#include <string>

#include "cycloschur/qpoly.hpp"

namespace cycloschur {

// The n-th cyclotomic polynomial, computed by exact division of t^n - 1
// by the cyclotomic polynomials of the proper divisors of n.
QPoly cyclotomic_polynomial(int n);

// The field Q(zeta_n) realized as Q[t] / Phi_n(t).  Phi_n is irreducible,
// so every nonzero residue is invertible.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> make(int conductor);

  int conductor() const { return n_; }
  const QPoly& modulus() const { return modulus_; }
  int degree() const { return qpoly::degree(modulus_); }

 private:
  explicit CycloField(int n) : n_(n), modulus_(cyclotomic_polynomial(n)) {}
  int n_;
  QPoly modulus_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

// Element of Q(zeta_n): a rational polynomial of degree < phi(n), reduced
// modulo Phi_n.  Elements of different conductors never mix.
class CycloElem {
 public:
  CycloElem(FieldPtr field, QPoly residue);

  static CycloElem from_rational(const FieldPtr& f, const Rational& q) {
    return CycloElem(f, qpoly::constant(q));
  }
  // zeta^k, k taken modulo the conductor (negative k allowed).
  static CycloElem zeta_pow(const FieldPtr& f, long k);

  const FieldPtr& field() const { return field_; }
  const QPoly& residue() const { return residue_; }
  bool is_zero() const { return residue_.empty(); }

  CycloElem operator-() const;
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) {
    return a * b.inv();
  }
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) {
    return !(a == b);
  }

  // Extended Euclid against Phi_n; throws DivisionByZero on zero.
  CycloElem inv() const;

  CycloElem pow(long e) const;

  // If the element lies in Q (degree <= 0), returns it.
  bool to_rational(Rational& out) const;

  // Coefficient-list rendering padded to phi(n): "[c0, c1, ...]".
  std::string str() const;

 private:
  FieldPtr field_;
  QPoly residue_;
};

std::ostream& operator<<(std::ostream& os, const CycloElem& e);

CycloElem root_of_unity_power(const FieldPtr& f, long k);

}  // namespace cycloschur

#endif
