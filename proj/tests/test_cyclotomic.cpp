#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycloschur/cyclotomic.hpp"

using namespace cycloschur;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
  QPoly p;
  for (long c : coeffs) p.push_back(Rational(c));
  qpoly::trim(p);
  return p;
}

}  // namespace

TEST_CASE("known cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == qp({-1, 1}));          // t - 1
  CHECK(cyclotomic_polynomial(2) == qp({1, 1}));           // t + 1
  CHECK(cyclotomic_polynomial(3) == qp({1, 1, 1}));        // t^2 + t + 1
  CHECK(cyclotomic_polynomial(4) == qp({1, 0, 1}));        // t^2 + 1
  // by the division recurrence: (t^6-1) / (Phi_1 Phi_2 Phi_3)
  CHECK(cyclotomic_polynomial(6) == qp({1, -1, 1}));       // t^2 - t + 1
  CHECK(qpoly::str(cyclotomic_polynomial(6)) == "t^2 - t + 1");
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("product over divisors gives t^n - 1") {
  for (int n = 1; n <= 12; ++n) {
    QPoly prod = qpoly::constant(Rational(1));
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = qpoly::mul(prod, cyclotomic_polynomial(d));
    QPoly want = qpoly::sub(qpoly::monomial(n), qpoly::constant(Rational(1)));
    CHECK(prod == want);
  }
}

TEST_CASE("residue arithmetic in small conductors") {
  auto f4 = CycloField::make(4);
  const CycloElem zeta = CycloElem::zeta_pow(f4, 1);
  const CycloElem minus_one = CycloElem::from_rational(f4, Rational(-1));
  CHECK(zeta * zeta == minus_one);        // zeta^2 = -1 mod t^2+1
  CHECK(zeta.inv() == -zeta);             // zeta * (-zeta) = 1
  CHECK(zeta.pow(4) == CycloElem::from_rational(f4, Rational(1)));

  auto f3 = CycloField::make(3);
  const CycloElem z3 = CycloElem::zeta_pow(f3, 1);
  CHECK(z3 + z3 * z3 == CycloElem::from_rational(f3, Rational(-1)));
}

TEST_CASE("root_of_unity_power enumerates the full orbit") {
  CHECK(root_of_unity_power(CycloField::make(2), 1) ==
        CycloElem::from_rational(CycloField::make(2), Rational(-1)));
  CHECK(root_of_unity_power(CycloField::make(4), 2) ==
        CycloElem::from_rational(CycloField::make(4), Rational(-1)));
  for (int n = 1; n <= 8; ++n) {
    auto f = CycloField::make(n);
    CHECK(root_of_unity_power(f, n) ==
          CycloElem::from_rational(f, Rational(1)));
    // negative exponents reduce modulo n
    CHECK(root_of_unity_power(f, -1) == root_of_unity_power(f, n - 1));
    // all n powers are roots of t^n - 1 and pairwise distinct
    std::vector<CycloElem> orbit;
    for (int k = 0; k < n; ++k) orbit.push_back(root_of_unity_power(f, k));
    for (int a = 0; a < n; ++a) {
      CHECK(orbit[a].pow(n) == CycloElem::from_rational(f, Rational(1)));
      for (int b = a + 1; b < n; ++b) CHECK(orbit[a] != orbit[b]);
    }
  }
}

TEST_CASE("zeta is a root of the modulus") {
  for (int n = 1; n <= 8; ++n) {
    auto f = CycloField::make(n);
    const CycloElem zeta = CycloElem::zeta_pow(f, 1);
    CycloElem acc = CycloElem::from_rational(f, Rational(0));
    const QPoly& mod = f->modulus();
    for (size_t i = 0; i < mod.size(); ++i)
      acc += CycloElem::from_rational(f, mod[i]) * zeta.pow(i);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("random nonzero elements are invertible") {
  std::mt19937_64 rng(1234);
  for (int n = 2; n <= 8; ++n) {
    auto f = CycloField::make(n);
    const CycloElem one = CycloElem::from_rational(f, Rational(1));
    int done = 0;
    while (done < 200) {
      QPoly res;
      for (int i = 0; i < f->degree(); ++i) {
        const long num = static_cast<long>(rng() % 21) - 10;
        const long den = static_cast<long>(rng() % 9) + 1;
        res.push_back(Rational(num, den));
      }
      qpoly::trim(res);
      CycloElem a(f, res);
      if (a.is_zero()) continue;
      CHECK(a * a.inv() == one);
      ++done;
    }
  }
}

TEST_CASE("error paths") {
  auto f3 = CycloField::make(3);
  auto f4 = CycloField::make(4);
  CHECK_THROWS_AS(CycloElem::from_rational(f3, Rational(0)).inv(),
                  DivisionByZero);
  CHECK_THROWS_AS(CycloElem::zeta_pow(f3, 1) + CycloElem::zeta_pow(f4, 1),
                  std::invalid_argument);
}

TEST_CASE("coefficient-list rendering") {
  auto f4 = CycloField::make(4);
  CHECK(CycloElem::zeta_pow(f4, 1).str() == "[0, 1]");
  CHECK(CycloElem::from_rational(f4, Rational(-2, 9)).str() == "[-2/9, 0]");
}
