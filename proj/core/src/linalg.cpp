#include "coxlab/linalg.hpp"

#include <bit>
#include <string>

#include "coxlab/error.hpp"

namespace coxlab {

Matrix invert(const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "invert needs a square matrix");
  const std::size_t n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work(piv, col).is_zero()) ++piv;
    if (piv == n) fail(errc::singular_matrix, "pivot " + std::to_string(col + 1));
    work.swap_rows(col, piv);
    inv.swap_rows(col, piv);
    const Rational d = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Matrix w = m;
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && w(piv, k).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      w.swap_rows(k, piv);
      sign = -sign;
    }
    const Rational pivot = w(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * pivot - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = Rational(0);
    }
    prev = pivot;
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

BruhatFactorisation bruhat(const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "bruhat needs a square matrix");
  const std::size_t n = m.rows();
  Matrix w = m;
  Matrix u1 = Matrix::identity(n);        // accumulates inverses of the row operations
  Matrix v = Matrix::identity(n);         // accumulates inverses of the column operations
  const std::size_t none = n;
  std::vector<std::size_t> col_owner(n, none);  // pivot column -> its row
  std::vector<std::size_t> pivot_col(n, none);
  for (std::size_t ii = n; ii-- > 0;) {
    const std::size_t i = ii;
    // Move the row's leftmost nonzero entry into an unused column, removing
    // entries in already-pivoted columns with row operations from below.
    for (;;) {
      std::size_t j = 0;
      while (j < n && w(i, j).is_zero()) ++j;
      if (j == n) fail(errc::singular_matrix, "zero row during Bruhat elimination");
      if (col_owner[j] == none) {
        pivot_col[i] = j;
        col_owner[j] = i;
        break;
      }
      const std::size_t r = col_owner[j];  // r > i, already reduced to a single entry
      const Rational alpha = w(i, j) / w(r, j);
      for (std::size_t c = 0; c < n; ++c) w(i, c) -= alpha * w(r, c);
      for (std::size_t c = 0; c < n; ++c) u1(c, r) += alpha * u1(c, i);
    }
    // Clear the row rightward of its pivot with column operations.
    const std::size_t j = pivot_col[i];
    for (std::size_t k = j + 1; k < n; ++k) {
      if (w(i, k).is_zero()) continue;
      const Rational alpha = w(i, k) / w(i, j);
      for (std::size_t r = 0; r < n; ++r) w(r, k) -= alpha * w(r, j);
      for (std::size_t c = 0; c < n; ++c) v(j, c) += alpha * v(k, c);
    }
  }
  // w is now a column-scaled permutation matrix: u2 = diag(pivots) * v.
  Matrix u2 = v;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& s = w(i, pivot_col[i]);
    for (std::size_t c = 0; c < n; ++c) u2(pivot_col[i], c) = s * v(pivot_col[i], c);
  }
  return BruhatFactorisation{std::move(u1), Permutation(std::move(pivot_col)), std::move(u2)};
}

std::vector<std::optional<std::size_t>> leftmost_profile(const Matrix& m) {
  std::vector<std::optional<std::size_t>> profile(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) {
        profile[i] = j;
        break;
      }
    }
  }
  return profile;
}

bool has_pu_form(const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "has_pu_form needs a square matrix");
  const auto profile = leftmost_profile(m);
  std::vector<bool> used(m.cols(), false);
  for (const auto& col : profile) {
    if (!col || used[*col]) return false;
    used[*col] = true;
  }
  return true;
}

Rational permanent(const Matrix& m, std::size_t max_n) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "permanent needs a square matrix");
  const std::size_t n = m.rows();
  if (n > max_n) {
    fail(errc::size_guard_exceeded,
         "permanent of " + std::to_string(n) + "x" + std::to_string(n) + " exceeds guard " +
             std::to_string(max_n));
  }
  if (n == 0) return Rational(1);
  // Ryser: per(m) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} m[i][j],
  // with column subsets visited in Gray-code order so each step updates the
  // row sums by a single column. Zero row sums are counted so the product is
  // only formed for subsets that contribute.
  std::vector<Rational> row_sums(n);
  std::size_t zero_rows = n;
  Rational total(0);
  const std::uint64_t end = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < end; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ next;
    const auto col = static_cast<std::size_t>(std::countr_zero(diff));
    const bool add = (next & diff) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& entry = m(i, col);
      if (entry.is_zero()) continue;
      const bool was_zero = row_sums[i].is_zero();
      if (add) {
        row_sums[i] += entry;
      } else {
        row_sums[i] -= entry;
      }
      const bool is_zero = row_sums[i].is_zero();
      if (was_zero && !is_zero) --zero_rows;
      if (!was_zero && is_zero) ++zero_rows;
    }
    gray = next;
    if (zero_rows > 0) continue;
    Rational prod(1);
    for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
    if (std::popcount(next) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return n % 2 == 0 ? total : -total;
}

}  // namespace coxlab
