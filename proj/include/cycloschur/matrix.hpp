#ifndef CYCLOSCHUR_MATRIX_HPP
#define CYCLOSCHUR_MATRIX_HPP

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cycloschur {

// Dense square matrix over one scalar field realization (exact or
// complex-float).
template <class S>
class Matrix {
 public:
  Matrix(int order, const S& fill)
      : n_(order), a_(static_cast<size_t>(order) * order, fill) {
    if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
  }

  int order() const { return n_; }
  S& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const S& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < n_; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < n_; ++r) std::swap(at(r, i), at(r, j));
  }

 private:
  int n_;
  std::vector<S> a_;
};

// Pivot quality: exact scalars only distinguish zero from nonzero; the
// float realization pivots by magnitude.
template <class S>
double pivot_weight(const S& s) {
  return s.is_zero() ? 0.0 : 1.0;
}
inline double pivot_weight(const std::complex<double>& s) {
  return std::abs(s);
}

// Determinant by Gaussian elimination over a field.  Singular matrices
// yield zero (exactly, for exact scalars).
template <class S>
S field_det(Matrix<S> m) {
  const int n = m.order();
  const S zero = m.at(0, 0) - m.at(0, 0);
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int best = -1;
    double best_w = 0.0;
    for (int row = col; row < n; ++row) {
      double w = pivot_weight(m.at(row, col));
      if (w > best_w) {
        best_w = w;
        best = row;
      }
    }
    if (best < 0) return zero;
    if (best != col) {
      m.swap_rows(best, col);
      sign = -sign;
    }
    const S pivot = m.at(col, col);
    for (int row = col + 1; row < n; ++row) {
      if (pivot_weight(m.at(row, col)) == 0.0) continue;
      S factor = m.at(row, col) / pivot;
      for (int c = col; c < n; ++c)
        m.at(row, c) = m.at(row, c) - factor * m.at(col, c);
    }
  }
  S det = m.at(0, 0);
  for (int i = 1; i < n; ++i) det = det * m.at(i, i);
  return sign < 0 ? zero - det : det;
}

// Permanent by Ryser's inclusion-exclusion over column subsets, iterated
// in Gray-code order so each step updates the row sums by one column.
template <class S>
S ryser_permanent(const Matrix<S>& m) {
  const int n = m.order();
  if (n > 24) throw std::invalid_argument("ryser_permanent: order too large");
  const S zero = m.at(0, 0) - m.at(0, 0);
  std::vector<S> row_sum(n, zero);
  S total = zero;
  unsigned long prev = 0;
  for (unsigned long k = 1; k < (1ul << n); ++k) {
    const unsigned long gray = k ^ (k >> 1);
    const unsigned long diff = gray ^ prev;
    int j = 0;
    while (!((diff >> j) & 1ul)) ++j;
    const bool added = (gray >> j) & 1ul;
    for (int i = 0; i < n; ++i)
      row_sum[i] =
          added ? row_sum[i] + m.at(i, j) : row_sum[i] - m.at(i, j);
    S prod = row_sum[0];
    for (int i = 1; i < n; ++i) prod = prod * row_sum[i];
    const int popcount = __builtin_popcountl(gray);
    if ((n - popcount) % 2 == 0)
      total = total + prod;
    else
      total = total - prod;
    prev = gray;
  }
  return total;
}

}  // namespace cycloschur

#endif
