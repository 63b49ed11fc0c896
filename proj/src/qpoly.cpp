#include "cycloschur/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cycloschur {
namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool is_zero(const QPoly& p) { return p.empty(); }

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly constant(const Rational& c) {
  QPoly p;
  if (!c.is_zero()) p.push_back(c);
  return p;
}

QPoly monomial(int deg, const Rational& c) {
  QPoly p;
  if (c.is_zero()) return p;
  p.assign(deg + 1, Rational(0));
  p[deg] = c;
  return p;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c.is_zero()) return {};
  QPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (is_zero(b)) throw DivisionByZero("polynomial division by zero");
  QPoly rem = a, quot;
  const int db = degree(b);
  const Rational lead_inv = b.back().inv();
  if (degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rational(0));
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const Rational c = rem.back() * lead_inv;
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    trim(rem);  // leading term cancels exactly
  }
  trim(quot);
  return {quot, rem};
}

QPoly div_exact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!is_zero(r)) throw std::invalid_argument("inexact polynomial division");
  return q;
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
  // Invariants: u0*a + v0*b = r0, u1*a + v1*b = r1.
  QPoly r0 = a, r1 = b;
  QPoly u0 = constant(1), v0;
  QPoly u1, v1 = constant(1);
  while (!is_zero(r1)) {
    auto [q, rem] = divmod(r0, r1);
    QPoly u2 = sub(u0, mul(q, u1));
    QPoly v2 = sub(v0, mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {r0, u0, v0};
}

Rational eval(const QPoly& p, const Rational& t) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string str(const QPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    if (p[i].is_zero()) continue;
    Rational c = p[i];
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    if (i == 0 || !c.is_one()) os << c.str();
    if (i > 0) {
      if (!c.is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qpoly
}  // namespace cycloschur
