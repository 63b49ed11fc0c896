#include "cycloschur/rational.hpp"

#include <ostream>

namespace cycloschur {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational literal with /0");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::pow(unsigned long e) const {
  Rational acc(1), base(*this);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  return v_.get_str();  // mpq prints "p" or "p/q", already canonical
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace cycloschur
