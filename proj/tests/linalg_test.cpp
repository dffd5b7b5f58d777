#include <gtest/gtest.h>

#include <random>

#include "coxlab/error.hpp"
#include "coxlab/linalg.hpp"
#include "testutil.hpp"

namespace coxlab {
namespace {

using testutil::cofactor_determinant;
using testutil::naive_permanent;
using testutil::random_integer_matrix;
using testutil::random_invertible_matrix;
using testutil::random_unipotent_upper;

TEST(Rational, CanonicalForm) {
  Rational r(2, 6);
  EXPECT_EQ(r, Rational(1, 3));
  EXPECT_EQ(r.str(), "1/3");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(0, 5).den(), 1);
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_THROW(Rational(1, 0), error);
  EXPECT_THROW(Rational::parse("x"), error);
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).str(), "1/2");
  EXPECT_EQ((Rational(1, 3) / Rational(2)).str(), "1/6");
}

TEST(Matrix, TextFormatRoundTrip) {
  Matrix m(2, 3);
  m(0, 0) = Rational(1, 2);
  m(1, 2) = Rational(-7);
  Matrix back = Matrix::parse(m.format());
  EXPECT_EQ(back, m);
  EXPECT_EQ(back.format(), m.format());
  EXPECT_THROW(Matrix::parse("2 2\n1 2 3"), error);
}

TEST(Matrix, IdentityIsNeutral) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_integer_matrix(3, rng);
    EXPECT_EQ(Matrix::identity(3) * m, m);
    EXPECT_EQ(m * Matrix::identity(3), m);
  }
}

TEST(Matrix, ProductDimensionsChecked) {
  Matrix a(2, 3), b(2, 2);
  EXPECT_THROW(a * b, error);
  Matrix zero_width(2, 0), zero_height(0, 3);
  Matrix prod = zero_width * zero_height;
  EXPECT_EQ(prod.rows(), 2u);
  EXPECT_EQ(prod.cols(), 3u);
  EXPECT_TRUE(prod.is_zero());
}

TEST(Permutation, MatrixConvention) {
  // matrix()[i][sigma(i)] = 1: the reversal on 4 points has 1s on the
  // antidiagonal, matching the golden factorisation fixture.
  Permutation rev({3, 2, 1, 0});
  Matrix expected{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  EXPECT_EQ(rev.matrix(), expected);
  EXPECT_EQ(Permutation::from_matrix(expected), rev);
  EXPECT_EQ(rev.one_line_str(), "(4 3 2 1)");
  EXPECT_EQ(rev.cycle_str(), "(1 4)(2 3)");
  EXPECT_EQ(rev.sign(), 1);
  EXPECT_EQ(Permutation({1, 0, 2}).sign(), -1);
}

TEST(Permutation, FromMatrixRejectsNonPermutations) {
  EXPECT_THROW(Permutation::from_matrix(Matrix{{1, 1}, {0, 1}}), error);
  EXPECT_THROW(Permutation::from_matrix(Matrix{{2, 0}, {0, 1}}), error);
  EXPECT_THROW(Permutation::from_matrix(Matrix{{1, 0}, {1, 0}}), error);
  EXPECT_THROW(Permutation::from_matrix(Matrix{{0, 0}, {0, 1}}), error);
}

TEST(Permutation, MatrixRoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation sigma(img);
    EXPECT_EQ(Permutation::from_matrix(sigma.matrix()), sigma);
  }
}

TEST(Invert, IdentityAndZeta) {
  EXPECT_EQ(invert(Matrix::identity(3)), Matrix::identity(3));
  // zeta matrix of the 3-chain and its Mobius inverse
  Matrix zeta{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  Matrix mobius = invert(zeta);
  EXPECT_EQ(zeta * mobius, Matrix::identity(3));
  Matrix expected{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}};
  EXPECT_EQ(mobius, expected);
}

TEST(Invert, SingularThrows) {
  Matrix singular{{1, 1}, {1, 1}};
  EXPECT_THROW(invert(singular), error);
  try {
    invert(singular);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::singular_matrix);
  }
}

TEST(Determinant, IdentityAndPermutationMatrices) {
  EXPECT_EQ(determinant(Matrix::identity(4)), Rational(1));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation sigma(img);
    EXPECT_EQ(determinant(sigma.matrix()), Rational(static_cast<long>(sigma.sign())));
  }
}

TEST(Determinant, CofactorOracle) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix m = random_integer_matrix(n, rng);
    EXPECT_EQ(determinant(m), cofactor_determinant(m));
  }
}

TEST(Determinant, BruhatProduct) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix m = random_invertible_matrix(n, rng);
    auto b = bruhat(m);
    Rational prod(static_cast<long>(b.p.sign()));
    for (const Rational& d : b.u1.diagonal()) prod *= d;
    for (const Rational& d : b.u2.diagonal()) prod *= d;
    EXPECT_EQ(determinant(m), prod);
  }
}

TEST(Bruhat, IdentityAndAntidiagonal) {
  auto b = bruhat(Matrix::identity(4));
  EXPECT_TRUE(b.u1.is_identity());
  EXPECT_TRUE(b.p.is_identity());
  EXPECT_TRUE(b.u2.is_identity());

  Permutation rev({4, 3, 2, 1, 0});
  auto br = bruhat(rev.matrix());
  EXPECT_TRUE(br.u1.is_identity());
  EXPECT_TRUE(br.u2.is_identity());
  EXPECT_EQ(br.p, rev);
}

TEST(Bruhat, GoldenFourByFourExample) {
  Matrix c{{0, 0, 0, -1}, {0, 0, 1, -1}, {0, 1, 0, -1}, {-1, 1, 1, -1}};
  auto b = bruhat(c);
  EXPECT_TRUE(b.u1.is_identity());
  EXPECT_EQ(b.p, Permutation({3, 2, 1, 0}));
  EXPECT_EQ(b.u1 * b.p.matrix() * b.u2, c);
  // The recorded witness factorisation also reconstructs the input.
  Matrix witness_u2{{-1, 1, 1, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}, {0, 0, 0, -1}};
  EXPECT_EQ(b.p.matrix() * witness_u2, c);
}

TEST(Bruhat, SingularThrows) {
  Matrix singular{{1, 2}, {2, 4}};
  EXPECT_THROW(bruhat(singular), error);
}

TEST(Bruhat, ReconstructionAndUniquenessUnderUnipotentFactors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix m = random_invertible_matrix(n, rng);
    auto b = bruhat(m);
    EXPECT_EQ(b.u1 * b.p.matrix() * b.u2, m);
    EXPECT_TRUE(b.u1.is_upper_triangular());
    EXPECT_TRUE(b.u2.is_upper_triangular());
    Matrix v = random_unipotent_upper(n, rng);
    Matrix w = random_unipotent_upper(n, rng);
    EXPECT_EQ(bruhat(v * m * w).p, b.p);
  }
}

TEST(LeftmostProfile, GoldenMatrices) {
  // Rows 2 and 3 of the golden 8x8 Coxeter fixture collide in column 1.
  Matrix c8{{0, 0, 0, 0, 0, 0, 0, -1}, {-1, 0, 1, 0, 0, 0, 1, -1},
            {-1, 0, 0, 0, 1, 0, 1, -1}, {-1, 0, 1, 0, 1, 0, 0, -1},
            {0, 0, 0, -1, 0, 1, 1, -1}, {-2, 0, 1, 0, 1, 0, 1, -1},
            {0, -1, 0, 0, 1, 1, 0, -1}, {0, -1, 0, -1, 1, 1, 1, -1}};
  auto profile = leftmost_profile(c8);
  EXPECT_EQ(*profile[1], 0u);
  EXPECT_EQ(*profile[2], 0u);
  EXPECT_FALSE(has_pu_form(c8));

  Matrix c4{{0, 0, 0, -1}, {0, 0, 1, -1}, {0, 1, 0, -1}, {-1, 1, 1, -1}};
  auto p4 = leftmost_profile(c4);
  EXPECT_EQ(*p4[0], 3u);
  EXPECT_EQ(*p4[1], 2u);
  EXPECT_EQ(*p4[2], 1u);
  EXPECT_EQ(*p4[3], 0u);
  EXPECT_TRUE(has_pu_form(c4));

  EXPECT_TRUE(has_pu_form(Matrix::identity(5)));
  Matrix with_zero_row(2, 2);
  with_zero_row(0, 0) = Rational(1);
  EXPECT_FALSE(has_pu_form(with_zero_row));
}

TEST(LeftmostProfile, PuFormEquivalentToTrivialU1) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix m = random_invertible_matrix(n, rng);
    EXPECT_EQ(has_pu_form(m), bruhat(m).u1.is_identity());
    if (!has_pu_form(m)) continue;
    // concrete form: sending row i to row position lambda(i) yields an upper
    // triangular matrix with nonzero diagonal
    auto profile = leftmost_profile(m);
    Matrix sorted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sorted(*profile[i], j) = m(i, j);
    EXPECT_TRUE(sorted.is_upper_triangular());
    for (std::size_t i = 0; i < n; ++i) EXPECT_FALSE(sorted(i, i).is_zero());
  }
}

TEST(Permanent, SmallCases) {
  EXPECT_EQ(permanent(Matrix::identity(6)), Rational(1));
  EXPECT_EQ(permanent(Matrix{{1, 1}, {1, 1}}), Rational(2));
  EXPECT_EQ(permanent(Matrix(0, 0)), Rational(1));
  Matrix c4{{0, 0, 0, -1}, {0, 0, 1, -1}, {0, 1, 0, -1}, {-1, 1, 1, -1}};
  EXPECT_EQ(permanent(c4), Rational(1));
}

TEST(Permanent, RyserMatchesNaiveSum) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix m = random_integer_matrix(n, rng);
    EXPECT_EQ(permanent(m), naive_permanent(m));
  }
}

TEST(Permanent, PermutationInvariance) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix m = random_integer_matrix(n, rng);
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    Matrix pm = Permutation(img).matrix();
    Rational base = permanent(m);
    EXPECT_EQ(permanent(pm * m), base);
    EXPECT_EQ(permanent(m * pm), base);
  }
}

TEST(Permanent, SizeGuard) {
  Matrix big(25, 25);
  EXPECT_THROW(permanent(big), error);
  try {
    permanent(big);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::size_guard_exceeded);
  }
  Matrix small(3, 3);
  EXPECT_THROW(permanent(small, 2), error);
}

}  // namespace
}  // namespace coxlab
