#include <gtest/gtest.h>

#include "lrb/errors.hpp"
#include "lrb/fixtures.hpp"
#include "lrb/operators.hpp"
#include "lrb/quotients.hpp"
#include "support.hpp"

namespace lrb {
namespace {

// [Tu,Tv] = T(rho^L(Tu)v + rho^R(Tv)u) on basis pairs, written out directly.
bool rbo_by_hand(const Representation& rep, const Matrix& t) {
  const std::size_t n = rep.module_dim;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const Vector tu = t.column(u), tv = t.column(v);
      const Vector lhs = rep.algebra.bracket(tu, tv);
      Vector inner(n);
      for (std::size_t i = 0; i < rep.algebra.dim(); ++i)
        for (std::size_t k = 0; k < n; ++k) inner[k] += tu[i] * rep.left[i](k, v) + tv[i] * rep.right[i](k, u);
      if (lhs != t * inner) return false;
    }
  return true;
}

TEST(RotaBaxter, Dim2Fixtures) {
  EXPECT_FALSE(is_rbo_leibniz(fixtures::dim2_zero_symmetric()).has_value());
  EXPECT_FALSE(is_rbo_leibniz(fixtures::dim2_identity_antisymmetric()).has_value());
  LinearOperator bad = fixtures::dim2_zero_symmetric();
  bad.matrix = Matrix::from_rows({{0, 0}, {0, 1}}, 2);
  EXPECT_TRUE(is_rbo_leibniz(bad).has_value());
}

TEST(RotaBaxter, AgreesWithHandOracle) {
  std::mt19937_64 rng(30);
  std::uniform_int_distribution<int> d(-1, 1);
  int hits = 0;
  for (const auto& r : fixtures::random_representations(25, 31)) {
    for (int k = 0; k < 8; ++k) {
      Matrix t(r.algebra.dim(), r.module_dim);
      for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = d(rng) * (rng() % 3 == 0);
      const LinearOperator op{r, t};
      const bool hand = rbo_by_hand(r, t);
      hits += hand;
      EXPECT_EQ(!is_rbo_leibniz(op).has_value(), hand);
    }
  }
  EXPECT_GT(hits, 0);
}

TEST(RotaBaxter, ShapeMismatchThrows) {
  LinearOperator t = fixtures::dim2_zero_symmetric();
  t.matrix = Matrix(3, 2);
  EXPECT_THROW(check_shapes(t), DimensionError);
}

TEST(LieRotaBaxter, MatrixIdentityFixtures) {
  for (const auto& f : fixtures::lie_rbo_fixtures()) {
    EXPECT_FALSE(is_rbo_lie(f.op).has_value()) << f.name;
    // A Lie RBO is a Leibniz RBO for (rho, -rho).
    EXPECT_FALSE(is_rbo_leibniz(functor_F(f.op)).has_value()) << f.name;
  }
}

TEST(Averaging, PrOnLeibnizAlgebras) {
  for (const Algebra& a : {fixtures::leibniz_dim2(), fixtures::hemisemidirect_sl2()}) {
    const LinearOperator pr = fixtures::pr_averaging(a);
    EXPECT_FALSE(is_averaging(pr).has_value());
    EXPECT_FALSE(is_rbo_leibniz(functor_calF(pr)).has_value());
  }
  EXPECT_FALSE(is_averaging(fixtures::adjoint_identity_averaging()).has_value());
}

TEST(Averaging, RejectsNonLieTarget) {
  LinearOperator t = fixtures::dim2_zero_symmetric();
  EXPECT_THROW(is_averaging(t), InputError);
  EXPECT_THROW(is_rbo_lie(t), InputError);
}

TEST(Descendent, BracketIsLeibnizAndTIsAHomomorphism) {
  for (const auto& f : fixtures::builtin_operators()) {
    const LinearOperator t = f.kind == OperatorKind::rbo_leibniz ? f.op
                             : f.kind == OperatorKind::rbo_lie  ? functor_F(f.op)
                                                                : functor_calF(f.op);
    const Algebra v = descendent_bracket(t);
    EXPECT_FALSE(check_leibniz(v).has_value()) << f.name;
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j)
        EXPECT_EQ(t.matrix * v.bracket_basis(i, j), t.target().bracket(t.matrix.column(i), t.matrix.column(j))) << f.name;
    EXPECT_FALSE(check_representation(induced_rep_on_target(t)).has_value()) << f.name;
  }
}

TEST(Descendent, RejectsNonOperators) {
  LinearOperator bad = fixtures::dim2_zero_symmetric();
  bad.matrix = Matrix::from_rows({{0, 0}, {0, 1}}, 2);
  EXPECT_THROW(descendent_bracket(bad), AxiomError);
}

TEST(Functors, GAndCalGGiveLieOperators) {
  const Algebra a = fixtures::leibniz_dim2();
  const LinearOperator sym = fixtures::dim2_zero_symmetric();
  const LinearOperator g = functor_G(sym, canonical_lie(a));
  EXPECT_FALSE(is_rbo_lie(g).has_value());
  const LinearOperator anti = fixtures::dim2_identity_antisymmetric();
  const LinearOperator cg = functor_calG(anti, canonical_lie(a));
  EXPECT_FALSE(is_averaging(cg).has_value());
  EXPECT_EQ(cg.matrix, canonical_lie(a).pr);
  EXPECT_THROW(functor_G(anti, canonical_lie(a)), InputError);
}

TEST(Functors, CalGOfIdentityIsPr) {
  const Algebra a = fixtures::hemisemidirect_sl2();
  const QuotientData q = canonical_lie(a);
  const LinearOperator id{fixtures::antisymmetric_adjoint(a), Matrix::identity(a.dim())};
  ASSERT_FALSE(is_rbo_leibniz(id).has_value());
  EXPECT_EQ(functor_calG(id, q).matrix, fixtures::pr_averaging(a).matrix);
}

TEST(Homomorphism, IdentityAndScalingOnAbelianFixture) {
  const LinearOperator t = fixtures::abelian_identity();
  const std::size_t n = t.source_dim();
  EXPECT_FALSE(check_operator_homomorphism({Matrix::identity(n), Matrix::identity(n)}, t, t).has_value());
  const Matrix two = 2 * Matrix::identity(n);
  EXPECT_FALSE(check_operator_homomorphism({two, two}, t, t).has_value());
  EXPECT_TRUE(check_operator_homomorphism({two, Matrix::identity(n)}, t, t).has_value());
}

TEST(Homomorphism, PrFromLeibnizOperatorToItsReduction) {
  const Algebra a = fixtures::leibniz_dim2();
  const QuotientData q = canonical_lie(a);
  const LinearOperator t = fixtures::dim2_zero_symmetric();
  const LinearOperator g = functor_F(functor_G(t, q));
  EXPECT_FALSE(check_operator_homomorphism({q.pr, Matrix::identity(2)}, t, g).has_value());
}

TEST(Equivariance, AbelianIdentity) {
  const EquivarianceReport r = check_equivariance(fixtures::abelian_identity());
  EXPECT_TRUE(r.equivariant());
  ASSERT_TRUE(r.derivations.has_value());
  EXPECT_FALSE(r.derivations->has_value());
}

TEST(Equivariance, ReportsFailures) {
  const EquivarianceReport r = check_equivariance(fixtures::dim2_identity_antisymmetric());
  EXPECT_EQ(r.equivariant(), !r.left && !r.right);
  if (!r.equivariant()) EXPECT_FALSE(r.derivations.has_value());
}

TEST(Enumerate, MatchesBruteForceCount) {
  const Representation rep = fixtures::symmetric_adjoint(fixtures::leibniz_dim2());
  const std::vector<Scalar> entries{-1, 0, 1};
  std::vector<Matrix> expected;
  for (int code = 0; code < 81; ++code) {
    Matrix t(2, 2);
    int c = code;
    for (int k = 3; k >= 0; --k) {
      t(k / 2, k % 2) = entries[c % 3];
      c /= 3;
    }
    if (rbo_by_hand(rep, t)) expected.push_back(t);
  }
  EXPECT_EQ(enumerate_operators(rep, entries, OperatorKind::rbo_leibniz), expected);
}

TEST(Enumerate, LieKindsOnSl2) {
  const Algebra g = fixtures::sl2();
  const Representation ad = symmetric_representation(g, {g.left_multiplication(0), g.left_multiplication(1), g.left_multiplication(2)});
  const auto ops = enumerate_operators(ad, {0, 1}, OperatorKind::averaging);
  EXPECT_FALSE(ops.empty());
  for (const auto& m : ops) EXPECT_FALSE(is_averaging({ad, m}).has_value());
  EXPECT_EQ(ops.front(), Matrix(3, 3));
}

}  // namespace
}  // namespace lrb
