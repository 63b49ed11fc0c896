#include "cycloschur/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "cycloschur/report.hpp"

namespace cycloschur {
namespace selfcheck {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
CheckResult timed(const std::string& name, double limit_ms, F fn) {
  CheckResult r;
  r.name = name;
  r.limit_ms = limit_ms;
  const auto t0 = Clock::now();
  try {
    auto [ok, detail] = fn();
    r.pass = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (r.pass && limit_ms > 0.0 && r.elapsed_ms >= limit_ms) {
    r.pass = false;
    r.detail += " [exceeded time budget]";
  }
  return r;
}

Rational eval_rat(const Poly& p, const std::vector<Rational>& xs,
                  const Rational& xi) {
  return p.eval(xs, xi, Rational(0), Rational(1),
                [](const Rational& q) { return q; });
}

// Independent permanent oracle: plain sum over all permutations.
Rational naive_permanent(const Matrix<Rational>& m) {
  const int n = m.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    Rational prod(1);
    for (int i = 0; i < n; ++i) prod *= m.at(i, p[i]);
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// "phi8 + ξ^3·phi5 + ..." with an optional y-power prefix per term.
std::string phi_series_str(int n, int r, int j, bool with_y) {
  std::ostringstream os;
  bool first = true;
  for (auto [t, e] : box_series_indices(n, r, j)) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream term;
    if (t > 0) term << "ξ^" << t * n;
    if (e > 0) {
      if (t > 0) term << "·";
      if (with_y) {
        term << "y";
        if (e > 1) term << "^" << e;
        term << "·";
      }
      term << "φ" << e;
    } else if (t == 0) {
      term << "1";
    }
    os << term.str();
  }
  return os.str();
}

Poly xi_poly(std::initializer_list<std::pair<int, long>> coeffs) {
  Poly p(0);
  for (auto [e, c] : coeffs) p.add_term({e}, Rational(c));
  return p;
}

std::vector<std::pair<int, int>> cross_check_params() {
  return {{2, 1}, {2, 2}, {3, 2}, {4, 2}, {3, 3}};
}

template <class B>
std::pair<bool, std::string> gaudin_cross_impl(uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto [n, r] : cross_check_params()) {
    B b(n);
    TheoremInstance inst = random_instance(
        rng, n, r,
        std::is_same_v<B, ExactBackend> ? BackendKind::exact
                                        : BackendKind::floating);
    auto det = field_det(gaudin_matrix(inst, b));
    auto direct = gaudin_direct(inst, b);
    if (!B::equal(det, direct))
      return {false, "det(gaudin_matrix) != G at n=" + std::to_string(n) +
                         " r=" + std::to_string(r)};
  }
  return {true, "5 parameter pairs"};
}

template <class B>
std::pair<bool, std::string> factorization_impl(uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto [n, r] : cross_check_params()) {
    B b(n);
    TheoremInstance inst = random_instance(
        rng, n, r,
        std::is_same_v<B, ExactBackend> ? BackendKind::exact
                                        : BackendKind::floating);
    const auto gm = gaudin_matrix(inst, b);
    const auto gp = gaudin_matrix_phi(inst, b);
    const auto pm = power_matrix(inst, b);
    const auto phis = phi_values(b, n, r, inst.x_values);
    std::vector<typename B::scalar> diag;
    for (int j = 0; j < n; ++j)
      diag.push_back(diagonal_value(b, j, n, r, phis, inst.xi));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!B::equal(gm.at(i, j), pm.at(i, j) * diag[j]))
          return {false, "power*diag mismatch at n=" + std::to_string(n) +
                             " r=" + std::to_string(r)};
        if (!B::equal(gm.at(i, j), gp.at(i, j)))
          return {false, "phi-series entry mismatch at n=" +
                             std::to_string(n) + " r=" + std::to_string(r)};
      }
    const auto ys = unity_roots(b, n);
    const auto det_p = field_det(pm);
    const auto vand = vandermonde(ys, b.one());
    if (!B::equal(det_p, vand) && !B::equal(det_p, b.zero() - vand))
      return {false, "power-matrix determinant is not ±Vandermonde at n=" +
                         std::to_string(n) + " r=" + std::to_string(r)};
  }
  return {true, "5 parameter pairs, entrywise + ±Vandermonde"};
}

}  // namespace

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Rational random_rational(std::mt19937_64& rng, int max_abs, bool nonzero) {
  for (;;) {
    const int num = rand_int(rng, -max_abs, max_abs);
    if (nonzero && num == 0) continue;
    const int den = rand_int(rng, 1, max_abs);
    return Rational(num, den);
  }
}

TheoremInstance random_instance(std::mt19937_64& rng, int n, int r,
                                BackendKind backend) {
  for (;;) {
    TheoremInstance inst;
    inst.n = n;
    inst.r = r;
    inst.backend = backend;
    inst.xi = random_rational(rng, 20, /*nonzero=*/true);
    inst.x_values.clear();
    for (int k = 0; k < r; ++k)
      inst.x_values.push_back(random_rational(rng, 20));
    try {
      inst.validate();
      return inst;
    } catch (const DegenerateInstance&) {
      // resample
    }
  }
}

std::vector<CheckResult> worked_example_checks() {
  std::vector<CheckResult> out;

  out.push_back(timed(
      "display n=4 r=2 expansions", 0, []() -> std::pair<bool, std::string> {
        const char* golden[4] = {
            "m[3] + m[2,1]",
            "m[3,1] + m[2,2] + ξ^4",
            "m[3,2] + ξ^4·m[1]",
            "m[3,3] + ξ^4·(m[2] + m[1,1])",
        };
        for (int p = 0; p < 4; ++p) {
          const std::string got = schur_box_spec_combo(p, 4, 2).render();
          if (got != golden[p])
            return {false, "p=" + std::to_string(p) + ": got '" + got +
                               "', want '" + golden[p] + "'"};
        }
        return {true, "4 expansions match"};
      }));

  out.push_back(timed(
      "display n=3 r=3 gaudin entries", 0,
      []() -> std::pair<bool, std::string> {
        const char* golden[3] = {
            "y^4·φ4 + ξ^3·y·φ1",
            "y^5·φ5 + ξ^3·y^2·φ2",
            "y^6·φ6 + ξ^3·y^3·φ3 + ξ^6",
        };
        const int n = 3, r = 3;
        for (int j = 0; j < n; ++j) {
          const std::string got = phi_series_str(n, r, j, /*with_y=*/true);
          if (got != golden[j])
            return {false, "j=" + std::to_string(j) + ": got '" + got + "'"};
        }
        // numeric re-derivation at rational points, y generic
        std::mt19937_64 rng(91);
        for (int rep = 0; rep < 3; ++rep) {
          const Rational y0 = random_rational(rng, 9, true);
          const Rational xi = random_rational(rng, 9, true);
          std::vector<Rational> xs, sx;
          for (int k = 0; k < r; ++k) xs.push_back(random_rational(rng, 9));
          for (const auto& x : xs) sx.push_back(y0 * x);
          for (int j = 0; j < n; ++j) {
            IntVector lam(r, n - 1);
            lam.back() = j;
            Matrix<Rational> jt(r, Rational(0));
            for (int a = 0; a < r; ++a)
              for (int c = 0; c < r; ++c)
                jt.at(a, c) =
                    eval_rat(complete_spec(lam[a] + c - a, n, r), sx, xi);
            const Rational lhs = field_det(jt);
            Rational rhs(0);
            for (auto [t, e] : box_series_indices(n, r, j))
              rhs += xi.pow(static_cast<unsigned long>(t) * n) *
                     y0.pow(e) *
                     phi_combo(e, n, r).eval(
                         xs, Rational(1), Rational(0), Rational(1),
                         [](const Rational& q) { return q; });
            if (lhs != rhs)
              return {false,
                      "entry value mismatch at j=" + std::to_string(j)};
          }
        }
        return {true, "3 entry formulas match, 3 random points each"};
      }));

  out.push_back(timed(
      "display n=3 r=3 factorization", 0,
      []() -> std::pair<bool, std::string> {
        const char* golden[3] = {"φ4 + ξ^3·φ1", "φ5 + ξ^3·φ2",
                                 "φ6 + ξ^3·φ3 + ξ^6"};
        const int n = 3, r = 3;
        for (int j = 0; j < n; ++j) {
          const std::string got = phi_series_str(n, r, j, /*with_y=*/false);
          if (got != golden[j])
            return {false, "diag j=" + std::to_string(j) + ": got '" + got +
                               "'"};
        }
        const int N = (n - 1) * (r - 1);
        const int want_exp[3] = {1, 2, 0};  // columns y, y^2, 1
        for (int j = 0; j < n; ++j)
          if ((N + j) % n != want_exp[j])
            return {false, "power-matrix exponents differ from display"};
        std::mt19937_64 rng(92);
        ExactBackend b(n);
        TheoremInstance inst = random_instance(rng, n, r, BackendKind::exact);
        const auto gm = gaudin_matrix(inst, b);
        const auto pm = power_matrix(inst, b);
        const auto phis = phi_values(b, n, r, inst.x_values);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            const auto want =
                pm.at(i, j) * diagonal_value(b, j, n, r, phis, inst.xi);
            if (!(gm.at(i, j) == want))
              return {false, "matrix product differs from gaudin matrix"};
          }
        return {true, "diagonal formulas + factorization at a random point"};
      }));

  out.push_back(timed(
      "display n=3 r=5 product at x=(1,1,1,1,1)", 0,
      []() -> std::pair<bool, std::string> {
        const int n = 3, r = 5;
        const char* golden_series[3] = {
            "φ8 + ξ^3·φ5 + ξ^6·φ2",
            "φ9 + ξ^3·φ6 + ξ^6·φ3 + ξ^9",
            "φ10 + ξ^3·φ7 + ξ^6·φ4 + ξ^9·φ1",
        };
        const Poly golden_ones[3] = {
            xi_poly({{0, 15}, {3, 51}, {6, 15}}),
            xi_poly({{0, 5}, {3, 45}, {6, 30}, {9, 1}}),
            xi_poly({{0, 1}, {3, 30}, {6, 45}, {9, 5}}),
        };
        const std::vector<Rational> ones(r, Rational(1));
        for (int i = 0; i < n; ++i) {
          if (phi_series_str(n, r, i, false) != golden_series[i])
            return {false, "series i=" + std::to_string(i)};
          const Poly got = diagonal_factor_combo(i, n, r).eval_x(ones);
          if (got != golden_ones[i])
            return {false, "ones specialization differs at i=" +
                               std::to_string(i) + ": " + got.str()};
        }
        // denominator (1 - xi^3)^15 = prod_k (x_k^3 - xi^3)^3 at ones, up
        // to the overall sign (-1)^15
        Poly den = poly_const(0, Rational(1));
        const Poly factor = xi_poly({{0, 1}, {3, -1}});
        for (int k = 0; k < 15; ++k) den *= factor;
        Poly den_generic = poly_const(0, Rational(1));
        const Poly xk3_minus = xi_poly({{0, 1}, {3, -1}});  // 1^3 - xi^3
        for (int k = 0; k < r; ++k)
          for (int t = 0; t < n; ++t) den_generic *= xk3_minus;
        if (den != den_generic)
          return {false, "denominator structure differs"};
        return {true, "3 factors + denominator match the display"};
      }));

  out.push_back(timed(
      "display scott/han product at x=(1,1)", 0,
      []() -> std::pair<bool, std::string> {
        for (int n = 1; n <= 8; ++n) {
          Poly prod = poly_const(0, Rational(1));
          const std::vector<Rational> ones(2, Rational(1));
          for (int i = 0; i < n; ++i)
            prod *= diagonal_factor_combo(i, n, 2).eval_x(ones);
          if (prod != scott_han_product(n))
            return {false, "diag product != scott product at n=" +
                               std::to_string(n)};
          // phi values at (1,1): phi_i = i+1 and phi_{n-1+i} = n-i
          for (int i = 0; i < n; ++i) {
            const Rational lo = phi_combo(i, n, 2).eval(
                ones, Rational(1), Rational(0), Rational(1),
                [](const Rational& q) { return q; });
            const Rational hi = phi_combo(n - 1 + i, n, 2).eval(
                ones, Rational(1), Rational(0), Rational(1),
                [](const Rational& q) { return q; });
            if (lo != Rational(i + 1) || hi != Rational(n - i))
              return {false, "phi values at (1,1) differ at n=" +
                                 std::to_string(n)};
          }
        }
        if (scott_han_product(2) != xi_poly({{0, 2}, {2, 2}}))
          return {false, "n=2 expansion"};
        if (scott_han_product(4) !=
            xi_poly({{0, 24}, {4, 104}, {8, 104}, {12, 24}}))
          return {false, "n=4 expansion"};
        return {true, "n <= 8 products match the diagonal factors"};
      }));

  return out;
}

CheckResult check_worked_examples() {
  return timed("criterion-1 worked-examples", 1000,
               []() -> std::pair<bool, std::string> {
                 auto subs = worked_example_checks();
                 for (const auto& s : subs)
                   if (!s.pass) return {false, s.name + ": " + s.detail};
                 return {true, std::to_string(subs.size()) +
                                   " displays reproduced"};
               });
}

CheckResult check_theorem_sweep(uint64_t seed, BackendKind backend) {
  const std::string name = backend == BackendKind::exact
                               ? "criterion-2 theorem-sweep"
                               : "criterion-2 theorem-sweep (float)";
  return timed(name, 120000, [=]() -> std::pair<bool, std::string> {
    std::mt19937_64 rng(seed);
    int count = 0;
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r <= 4; ++r)
        for (int rep = 0; rep < 3; ++rep) {
          TheoremInstance inst = random_instance(rng, n, r, backend);
          VerificationReport vr = verify_theorem(inst);
          ++count;
          if (!vr.equal)
            return {false, "mismatch: " + report_to_json(vr)};
        }
    return {true, std::to_string(count) + " instances verified"};
  });
}

CheckResult check_proposition_oracle() {
  return timed("criterion-3 proposition-oracle", 30000,
               []() -> std::pair<bool, std::string> {
                 for (int n = 2; n <= 5; ++n)
                   for (int r = 1; r <= 3; ++r)
                     for (int p = 0; p <= n - 1; ++p) {
                       IntVector lam(r, n - 1);
                       lam.back() = p;
                       const Poly jt = schur_jacobi_trudi(
                           lam, [&](int k) { return complete_spec(k, n, r); });
                       if (jt != schur_box_spec(p, n, r))
                         return {false, "n=" + std::to_string(n) +
                                            " r=" + std::to_string(r) +
                                            " p=" + std::to_string(p)};
                     }
                 return {true, "n in 2..5, r in 1..3, all p"};
               });
}

CheckResult check_gaudin_cross(uint64_t seed, BackendKind backend) {
  const std::string name = backend == BackendKind::exact
                               ? "criterion-4 gaudin-cross-check"
                               : "criterion-4 gaudin-cross-check (float)";
  return timed(name, 60000, [=]() -> std::pair<bool, std::string> {
    return backend == BackendKind::exact
               ? gaudin_cross_impl<ExactBackend>(seed)
               : gaudin_cross_impl<FloatBackend>(seed);
  });
}

CheckResult check_factorization(uint64_t seed, BackendKind backend) {
  const std::string name = backend == BackendKind::exact
                               ? "criterion-5 factorization"
                               : "criterion-5 factorization (float)";
  return timed(name, 60000, [=]() -> std::pair<bool, std::string> {
    return backend == BackendKind::exact
               ? factorization_impl<ExactBackend>(seed)
               : factorization_impl<FloatBackend>(seed);
  });
}

CheckResult check_borchardt(uint64_t seed) {
  return timed(
      "criterion-6 borchardt-permanent", 0,
      [=]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        for (int n = 1; n <= 6; ++n)
          for (int rep = 0; rep < 50; ++rep) {
            std::set<Rational> used;
            std::vector<Rational> y, z;
            while (static_cast<int>(y.size()) < n) {
              Rational v = random_rational(rng, 20);
              if (used.insert(v).second) y.push_back(v);
            }
            while (static_cast<int>(z.size()) < n) {
              Rational v = random_rational(rng, 20);
              if (used.insert(v).second) z.push_back(v);
            }
            if (!borchardt_check(y, z))
              return {false, "borchardt fails at n=" + std::to_string(n)};
          }
        for (int n = 1; n <= 5; ++n)
          for (int rep = 0; rep < 5; ++rep) {
            Matrix<Rational> m(n, Rational(0));
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j)
                m.at(i, j) = random_rational(rng, 10);
            if (ryser_permanent(m) != naive_permanent(m))
              return {false, "ryser != naive at n=" + std::to_string(n)};
          }
        return {true, "50 instances per n in 1..6; ryser vs naive n <= 5"};
      });
}

CheckResult check_pi_omega() {
  return timed(
      "criterion-7 pi-omega", 10000, []() -> std::pair<bool, std::string> {
        for (int r = 1; r <= 3; ++r) {
          // dual implementation over all admissible exponent vectors with
          // entries in [1-r, 4]
          IntVector v(r, 1 - r);
          for (;;) {
            bool admissible = true;
            for (int i = 0; i < r; ++i)
              if (v[i] < i + 1 - r) admissible = false;
            if (admissible && pi_omega(v) != pi_omega_symmetrized(v))
              return {false, "dual mismatch at r=" + std::to_string(r)};
            int i = r - 1;
            while (i >= 0 && v[i] == 4) v[i--] = 1 - r;
            if (i < 0) break;
            ++v[i];
          }
          // x^lambda pi_omega = S_lambda for partitions
          const DiffAlphabet x = DiffAlphabet::x_alphabet(r);
          for (int w = 0; w <= 4 * r; ++w)
            for (const Partition& lam : partitions_bounded(w, 4, r)) {
              const Poly schur = schur_jacobi_trudi(
                  lam.padded(r), [&](int k) { return complete_diff(k, x); });
              if (pi_omega(lam.padded(r)) != schur)
                return {false, "pi_omega != jacobi-trudi at " + lam.str() +
                                   " r=" + std::to_string(r)};
            }
        }
        return {true, "dual agreement + schur identity, r <= 3"};
      });
}

CheckResult check_backend_agreement(uint64_t seed) {
  return timed(
      "criterion-8 backend-agreement", 0,
      [=]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        int count = 0;
        for (int n = 2; n <= 6; ++n)
          for (int r = 1; r <= 4; ++r)
            for (int rep = 0; rep < 3; ++rep) {
              TheoremInstance inst =
                  random_instance(rng, n, r, BackendKind::exact);
              if (n > 5) continue;  // instances drawn to stay in step
              ExactBackend eb(n);
              FloatBackend fb(n);
              const auto exact_lhs = to_complex(theorem_lhs(inst, eb));
              const auto exact_rhs = to_complex(theorem_rhs(inst, eb));
              const auto float_lhs = theorem_lhs(inst, fb);
              const auto float_rhs = theorem_rhs(inst, fb);
              if (FloatBackend::rel_diff(exact_lhs, float_lhs) >=
                      FloatBackend::kRelTol ||
                  FloatBackend::rel_diff(exact_rhs, float_rhs) >=
                      FloatBackend::kRelTol)
                return {false, "backend disagreement at n=" +
                                   std::to_string(n) +
                                   " r=" + std::to_string(r)};
              ++count;
            }
        return {true, std::to_string(count) + " instances agree to 1e-9"};
      });
}

CheckResult check_sign_audit(uint64_t seed) {
  return timed(
      "criterion-9 sign-audit", 0, [=]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        std::string deviations;
        int unobservable = 0;
        for (int n = 2; n <= 6; ++n)
          for (int r = 1; r <= 4; ++r)
            for (int rep = 0; rep < 3; ++rep) {
              TheoremInstance inst =
                  random_instance(rng, n, r, BackendKind::exact);
              VerificationReport vr = verify_theorem(inst);
              if (vr.observed_sign == 0 && vr.equal) {
                // both sides vanish (a diagonal factor is zero at this x):
                // no sign to observe
                ++unobservable;
                continue;
              }
              if (vr.observed_sign != vr.expected_sign)
                deviations += " (n=" + std::to_string(n) +
                              ",r=" + std::to_string(r) + ": observed " +
                              std::to_string(vr.observed_sign) + ")";
            }
        if (!deviations.empty()) return {false, "deviations:" + deviations};
        std::string note =
            "observed sign matches (-1)^{(n-1)n/2+(n-1)(r-1)}";
        if (unobservable)
          note += "; " + std::to_string(unobservable) +
                  " zero-valued instance(s) carry no sign";
        return {true, note};
      });
}

std::vector<CheckResult> run_acceptance(const Options& opt) {
  std::vector<CheckResult> out;
  out.push_back(check_worked_examples());
  out.push_back(check_theorem_sweep(opt.seed, BackendKind::exact));
  out.push_back(check_proposition_oracle());
  out.push_back(check_gaudin_cross(opt.seed, BackendKind::exact));
  out.push_back(check_factorization(opt.seed, BackendKind::exact));
  out.push_back(check_borchardt(opt.seed));
  out.push_back(check_pi_omega());
  out.push_back(check_backend_agreement(opt.seed));
  out.push_back(check_sign_audit(opt.seed));
  if (opt.float_variants) {
    out.push_back(check_theorem_sweep(opt.seed, BackendKind::floating));
    out.push_back(check_gaudin_cross(opt.seed, BackendKind::floating));
    out.push_back(check_factorization(opt.seed, BackendKind::floating));
  }
  return out;
}

void print_results(std::ostream& os, const std::vector<CheckResult>& results,
                   bool with_timing) {
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail;
    if (with_timing) {
      char buf[64];
      if (r.limit_ms > 0)
        std::snprintf(buf, sizeof buf, " [%.1f ms / budget %.0f ms]",
                      r.elapsed_ms, r.limit_ms);
      else
        std::snprintf(buf, sizeof buf, " [%.1f ms]", r.elapsed_ms);
      os << buf;
    }
    os << "\n";
  }
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace selfcheck
}  // namespace cycloschur
