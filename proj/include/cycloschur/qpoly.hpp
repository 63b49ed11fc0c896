#ifndef CYCLOSCHUR_QPOLY_HPP
#define CYCLOSCHUR_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "cycloschur/rational.hpp"

namespace cycloschur {

// Dense univariate polynomial over the rationals, coefficient of t^i at
// index i.  Always trimmed: no trailing zero coefficients, so the zero
// polynomial is the empty vector.
using QPoly = std::vector<Rational>;

namespace qpoly {

void trim(QPoly& p);
bool is_zero(const QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial

QPoly constant(const Rational& c);
QPoly monomial(int deg, const Rational& c = Rational(1));

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);

// Euclidean division; the divisor may have any nonzero leading coefficient.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// Exact quotient; throws std::invalid_argument when the remainder is nonzero.
QPoly div_exact(const QPoly& a, const QPoly& b);

// g = gcd(a,b) together with u,v such that u*a + v*b = g.
struct ExtGcd {
  QPoly g, u, v;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);

Rational eval(const QPoly& p, const Rational& t);

std::string str(const QPoly& p, const std::string& var = "t");

}  // namespace qpoly
}  // namespace cycloschur

#endif
