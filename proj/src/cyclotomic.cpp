#include "cycloschur/cyclotomic.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cycloschur/errors.hpp"

namespace cycloschur {

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
  // Phi_d for all divisors d of n, bottom up; Phi_n = (t^n - 1) / prod Phi_d.
  std::map<int, QPoly> table;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    QPoly num = qpoly::sub(qpoly::monomial(d), qpoly::constant(Rational(1)));
    for (const auto& [e, phi] : table)
      if (d % e == 0) num = qpoly::div_exact(num, phi);
    table[d] = std::move(num);
  }
  return table[n];
}

std::shared_ptr<const CycloField> CycloField::make(int conductor) {
  return std::shared_ptr<const CycloField>(new CycloField(conductor));
}

namespace {

void require_same_field(const CycloElem& a, const CycloElem& b) {
  if (a.field()->conductor() != b.field()->conductor())
    throw std::invalid_argument("cyclotomic elements of mixed conductors");
}

}  // namespace

CycloElem::CycloElem(FieldPtr field, QPoly residue)
    : field_(std::move(field)), residue_(std::move(residue)) {
  if (!field_) throw std::invalid_argument("CycloElem without field");
  if (qpoly::degree(residue_) >= field_->degree())
    residue_ = qpoly::divmod(residue_, field_->modulus()).second;
}

CycloElem CycloElem::zeta_pow(const FieldPtr& f, long k) {
  const int n = f->conductor();
  k %= n;
  if (k < 0) k += n;
  return CycloElem(f, qpoly::monomial(static_cast<int>(k)));
}

CycloElem CycloElem::operator-() const {
  return CycloElem(field_, qpoly::scale(residue_, Rational(-1)));
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  return CycloElem(a.field_, qpoly::add(a.residue_, b.residue_));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  return CycloElem(a.field_, qpoly::sub(a.residue_, b.residue_));
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  return CycloElem(a.field_, qpoly::mul(a.residue_, b.residue_));
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  return a.residue_ == b.residue_;
}

CycloElem CycloElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
  auto eg = qpoly::ext_gcd(residue_, field_->modulus());
  // Phi_n irreducible and deg(residue) < deg(Phi_n), so the gcd is a
  // nonzero constant.
  if (qpoly::degree(eg.g) != 0)
    throw std::logic_error("cyclotomic inverse: non-constant gcd");
  return CycloElem(field_, qpoly::scale(eg.u, eg.g[0].inv()));
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloElem acc = from_rational(field_, Rational(1));
  CycloElem base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool CycloElem::to_rational(Rational& out) const {
  if (residue_.empty()) {
    out = Rational(0);
    return true;
  }
  if (qpoly::degree(residue_) == 0) {
    out = residue_[0];
    return true;
  }
  return false;
}

std::string CycloElem::str() const {
  std::ostringstream os;
  os << "[";
  const int d = field_->degree();
  for (int i = 0; i < d; ++i) {
    if (i) os << ", ";
    os << (i < static_cast<int>(residue_.size()) ? residue_[i] : Rational(0));
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloElem& e) {
  return os << e.str();
}

CycloElem root_of_unity_power(const FieldPtr& f, long k) {
  return CycloElem::zeta_pow(f, k);
}

}  // namespace cycloschur
