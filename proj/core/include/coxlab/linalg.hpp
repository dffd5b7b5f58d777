#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coxlab/matrix.hpp"
#include "coxlab/permutation.hpp"

namespace coxlab {

// m = u1 * p.matrix() * u2 with u1, u2 invertible upper triangular. The
// permutation p is the unique Bruhat permutation of m; u1 and u2 are the
// witnesses produced by the pinned pivoting scheme in bruhat() below.
struct BruhatFactorisation {
  Matrix u1;
  Permutation p;
  Matrix u2;
};

// Exact inverse; throws singular-matrix.
Matrix invert(const Matrix& m);

// Fraction-free (Bareiss) elimination; 0 for singular input.
Rational determinant(const Matrix& m);

// Bruhat factorisation via bottom-to-top row processing: each row pivots at
// its leftmost nonzero entry in a still-unused column, entries in used
// columns are removed first by row operations (recorded in u1), then the row
// is cleared rightward by column operations (recorded in u2). p maps a row
// to its pivot column, so u1 is the identity exactly when the rows' leftmost
// nonzero columns are pairwise distinct.
BruhatFactorisation bruhat(const Matrix& m);

// Column index of each row's leftmost nonzero entry; nullopt for a zero row.
std::vector<std::optional<std::size_t>> leftmost_profile(const Matrix& m);

// True iff the leftmost profile is total and injective; equivalently the
// Bruhat factorisation admits u1 = identity.
bool has_pu_form(const Matrix& m);

inline constexpr std::size_t kPermanentSizeGuard = 24;

// Exact permanent by Ryser's inclusion-exclusion with Gray-code subset
// traversal. Guarded at n <= max_n (library default 24: cost is Theta(2^n n)).
Rational permanent(const Matrix& m, std::size_t max_n = kPermanentSizeGuard);

}  // namespace coxlab
