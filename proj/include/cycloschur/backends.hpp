#ifndef CYCLOSCHUR_BACKENDS_HPP
#define CYCLOSCHUR_BACKENDS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include "cycloschur/cyclotomic.hpp"

namespace cycloschur {

// Scalar realization over Q(zeta_n); equality is exact.
struct ExactBackend {
  using scalar = CycloElem;

  explicit ExactBackend(int n) : field(CycloField::make(n)) {}

  FieldPtr field;

  scalar from_rational(const Rational& q) const {
    return CycloElem::from_rational(field, q);
  }
  scalar zero() const { return from_rational(Rational(0)); }
  scalar one() const { return from_rational(Rational(1)); }
  scalar zeta_pow(long k) const { return CycloElem::zeta_pow(field, k); }

  static bool equal(const scalar& a, const scalar& b) { return a == b; }
  static bool is_zero(const scalar& a) { return a.is_zero(); }
  static std::string str(const scalar& a) { return a.str(); }
};

// Scalar realization over complex doubles with zeta = exp(2*pi*i/n).
// Never authoritative: a cross-check at fixed relative tolerance.
struct FloatBackend {
  using scalar = std::complex<double>;
  static constexpr double kRelTol = 1e-9;

  explicit FloatBackend(int n_) : n(n_) {}

  int n;

  scalar from_rational(const Rational& q) const {
    return {q.to_double(), 0.0};
  }
  scalar zero() const { return {0.0, 0.0}; }
  scalar one() const { return {1.0, 0.0}; }
  scalar zeta_pow(long k) const {
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    return std::polar(1.0, arg);
  }

  static bool equal(const scalar& a, const scalar& b) {
    return rel_diff(a, b) < kRelTol;
  }
  static bool is_zero(const scalar& a) { return std::abs(a) == 0.0; }
  static double rel_diff(const scalar& a, const scalar& b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
  }
  static std::string str(const scalar& a) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << a.real() << "," << a.imag() << ")";
    return os.str();
  }
};

// Evaluates an exact cyclotomic scalar in the float realization.
inline std::complex<double> to_complex(const CycloElem& e) {
  const int n = e.field()->conductor();
  FloatBackend fb(n);
  std::complex<double> acc = fb.zero();
  const QPoly& res = e.residue();
  for (size_t i = 0; i < res.size(); ++i)
    acc += res[i].to_double() * fb.zeta_pow(static_cast<long>(i));
  return acc;
}

}  // namespace cycloschur

#endif
