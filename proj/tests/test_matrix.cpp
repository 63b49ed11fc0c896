#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "cycloschur/matrix.hpp"
#include "cycloschur/rational.hpp"
#include "oracles.hpp"

using namespace cycloschur;

namespace {

Rational rand_entry(std::mt19937_64& rng, int max_abs) {
  const long num = static_cast<long>(rng() % (2 * max_abs + 1)) - max_abs;
  const long den = static_cast<long>(rng() % max_abs) + 1;
  return Rational(num, den);
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, int n, int max_abs) {
  Matrix<Rational> m(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rand_entry(rng, max_abs);
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  Matrix<Rational> id(3, Rational(0));
  for (int i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
  CHECK(field_det(id) == Rational(1));

  Matrix<Rational> m(2, Rational(0));
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(1, 0) = Rational(3);
  m.at(1, 1) = Rational(4);
  CHECK(field_det(m) == Rational(-2));

  Matrix<Rational> sing(2, Rational(1));  // all ones
  CHECK(field_det(sing) == Rational(0));
}

TEST_CASE("determinant agrees with the permutation-expansion oracle") {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 25; ++rep) {
      const auto m = random_matrix(rng, n, 6);
      CHECK(field_det(m) == oracles::naive_det(m, Rational(0)));
    }
}

TEST_CASE("permanent basics and oracle agreement") {
  Matrix<Rational> one(1, Rational(7, 3));
  CHECK(ryser_permanent(one) == Rational(7, 3));

  std::mt19937_64 rng(43);
  Matrix<Rational> m2 = random_matrix(rng, 2, 9);
  CHECK(ryser_permanent(m2) ==
        m2.at(0, 0) * m2.at(1, 1) + m2.at(0, 1) * m2.at(1, 0));

  for (int n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      const auto m = random_matrix(rng, n, 6);
      CHECK(ryser_permanent(m) == oracles::naive_permanent(m, Rational(0)));
    }
}

TEST_CASE("row/column swaps negate the determinant, fix the permanent") {
  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 20; ++rep) {
    auto m = random_matrix(rng, 4, 8);
    const Rational d = field_det(m);
    const Rational p = ryser_permanent(m);
    auto s = m;
    s.swap_rows(1, 3);
    CHECK(field_det(s) == -d);
    CHECK(ryser_permanent(s) == p);
    auto c = m;
    c.swap_cols(0, 2);
    CHECK(field_det(c) == -d);
    CHECK(ryser_permanent(c) == p);
  }
}

TEST_CASE("float realization stays within 1e-9 relative of exact") {
  std::mt19937_64 rng(45);
  for (int rep = 0; rep < 20; ++rep) {
    const auto m = random_matrix(rng, 5, 10);
    Matrix<std::complex<double>> f(5, {0.0, 0.0});
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) f.at(i, j) = {m.at(i, j).to_double(), 0.0};
    const double exact = field_det(m).to_double();
    const std::complex<double> approx = field_det(f);
    const double err =
        std::abs(approx - std::complex<double>(exact, 0.0)) /
        std::max(1.0, std::abs(exact));
    CHECK(err < 1e-9);
  }
}
