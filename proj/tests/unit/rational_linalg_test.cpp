#include <gtest/gtest.h>

#include "lrb/algebra.hpp"
#include "lrb/errors.hpp"
#include "lrb/linalg.hpp"
#include "support.hpp"

namespace lrb {
namespace {

using testing::random_matrix;
using testing::textbook_rref;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("2/4"), Scalar(1, 2));
  EXPECT_EQ(parse_rational("-3"), Scalar(-3));
  EXPECT_EQ(parse_rational("-6/4"), Scalar(-3, 2));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(Scalar(-1, 3)), "-1/3");
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1//2", "/3", "2/", "6/-4"}) EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ArithmeticIsExact) {
  Scalar s = 0;
  for (int k = 1; k <= 30; ++k) s += Scalar(1, k * (k + 1));
  EXPECT_EQ(s, Scalar(30, 31));
}

TEST(Rref, IdentityIsFixed) {
  const Echelon e = rref(Matrix::identity(2));
  EXPECT_EQ(e.reduced, Matrix::identity(2));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RankOneExample) {
  const Matrix m = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
  const Echelon e = rref(m);
  EXPECT_EQ(e.reduced, Matrix::from_rows({{1, 2}}, 2));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, AgreesWithTextbookEliminationOnRandomMatrices) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 7, cols = 1 + (trial * 3) % 8;
    // Odd trials go through a rank-2 factorization.
    const Matrix m = trial % 2 ? random_matrix(rng, rows, 2) * random_matrix(rng, 2, cols) : random_matrix(rng, rows, cols);
    const auto [full, pivots] = textbook_rref(m);
    Matrix expected(pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) expected(r, c) = full(r, c);
    const Echelon e = rref(m);
    EXPECT_EQ(e.reduced, expected) << "trial " << trial;
    EXPECT_EQ(e.pivots, pivots) << "trial " << trial;
    EXPECT_EQ(rank(m), pivots.size());
  }
}

TEST(Kernel, DimensionAndVectorsAreRight) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 2 + trial % 6;
    const Matrix m = trial % 3 ? random_matrix(rng, rows, 1) * random_matrix(rng, 1, cols) : random_matrix(rng, rows, cols);
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim(), cols - testing::textbook_rank(m));
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(m * k.basis_vector(i)));
  }
}

TEST(Subspace, CoordinatesAndContainment) {
  const Subspace s = Subspace::span_of_vectors({{1, 1, 0}, {0, 1, 1}}, 3);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(Vector{1, 2, 1}));
  EXPECT_FALSE(s.contains(Vector{1, 0, 0}));
  const auto c = s.coordinates(Vector{2, 5, 3});
  ASSERT_TRUE(c.has_value());
  Vector back(3);
  for (std::size_t i = 0; i < s.dim(); ++i) back = add(back, scale((*c)[i], s.basis_vector(i)));
  EXPECT_EQ(back, (Vector{2, 5, 3}));
  EXPECT_TRUE(Subspace::full(3).contains(s));
  EXPECT_FALSE(s.contains(Subspace::full(3)));
}

TEST(Subspace, SpanIsBasisIndependent) {
  const Subspace a = Subspace::span_of_vectors({{1, 2, 3}, {0, 1, 1}}, 3);
  const Subspace b = Subspace::span_of_vectors({{1, 3, 4}, {2, 3, 5}, {1, 2, 3}}, 3);
  EXPECT_EQ(a, b);
}

TEST(QuotientCoordinates, KillSubAndSplitComplement) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 5, k = trial % n;
    const Subspace sub = Subspace::span_of_rows(random_matrix(rng, k, n));
    const QuotientCoordinates q = quotient_coordinates(n, sub);
    const std::size_t qd = n - sub.dim();
    ASSERT_EQ(q.coordinate_map.rows(), qd);
    EXPECT_EQ(q.coordinate_map * q.complement, Matrix::identity(qd));
    for (std::size_t i = 0; i < sub.dim(); ++i) EXPECT_TRUE(is_zero(q.coordinate_map * sub.basis_vector(i)));
  }
}

TEST(Invert, ProductIsIdentity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(rng, 4, 4);
    if (testing::textbook_rank(m) < 4) continue;
    EXPECT_EQ(m * invert(m), Matrix::identity(4));
  }
  EXPECT_THROW(invert(Matrix::from_rows({{1, 2}, {2, 4}}, 2)), InputError);
}

TEST(Kronecker, MatchesEntrywiseDefinition) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}}, 2);
  const Matrix b = Matrix::from_rows({{0, 5}}, 2);
  const Matrix k = kronecker(a, b);
  ASSERT_EQ(k.rows(), 2u);
  ASSERT_EQ(k.cols(), 4u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(k(i, j * 2 + l), a(i, j) * b(0, l));
}

}  // namespace
}  // namespace lrb
