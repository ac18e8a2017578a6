#include <gtest/gtest.h>

#include "lrb/brackets.hpp"
#include "lrb/cohomology.hpp"
#include "lrb/fixtures.hpp"
#include "lrb/operators.hpp"
#include "lrb/quotients.hpp"
#include "lrb/shuffles.hpp"
#include "support.hpp"

namespace lrb {
namespace {

using fixtures::MatrixFamily;

LinearOperator gl2_identity() { return fixtures::matrix_identity_rbo(MatrixFamily::general, 2); }

TEST(Reference, KernelOfOneRow) {
  const Subspace k = kernel_basis(Matrix::from_rows({{1, 1, 0}}, 3));
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE(k.contains(Vector{1, -1, 0}));
  EXPECT_TRUE(k.contains(Vector{0, 0, 1}));
}

TEST(Reference, QuotientByDiagonalLine) {
  const Subspace sub = Subspace::span_of_vectors({{1, 1, 0}}, 3);
  const QuotientCoordinates q = quotient_coordinates(3, sub);
  EXPECT_EQ(q.coordinate_map.rows(), 2u);
  EXPECT_EQ(kernel_basis(q.coordinate_map), sub);
}

TEST(Reference, RightActionBreakingThirdAxiom) {
  // 1-dim abelian algebra, L = 0, R = 1: R(y)L(x) = 0 but -R(y)R(x) = -1.
  const Algebra a = Algebra::abelian(1);
  const Representation r{a, 1, {Matrix(1, 1)}, {Matrix::identity(1)}};
  EXPECT_TRUE(check_representation(r).has_value());
}

TEST(Reference, SymmetricAdjointIsAlwaysARepresentation) {
  for (const Algebra& a : {fixtures::leibniz_dim2(), fixtures::hemisemidirect_sl2(), fixtures::sl2()})
    EXPECT_FALSE(check_representation(fixtures::symmetric_adjoint(a)).has_value());
}

TEST(Reference, SemidirectOfDim2Adjoint) {
  const Algebra s = semidirect_product(adjoint_representation(fixtures::leibniz_dim2()));
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_FALSE(check_leibniz(s).has_value());
}

TEST(Reference, ThetaOnDim2Adjoint) {
  const Algebra a = fixtures::leibniz_dim2();
  const QuotientData q = canonical_lie(a);
  const Representation theta = induced_theta(q, adjoint_representation(a));
  ASSERT_EQ(theta.left.size(), 1u);
  // The quotient is spanned by the class of e2, which acts by [e2,-]: e2 -> e1.
  EXPECT_EQ(theta.left[0], Matrix::from_rows({{0, 1}, {0, 0}}, 2));
}

TEST(Reference, SplitOfAntisymmetricSl2Adjoint) {
  const RepSplit s = split_representation(fixtures::antisymmetric_adjoint(fixtures::sl2()));
  EXPECT_EQ(s.v_anti.dim(), 3u);
  EXPECT_EQ(s.sym_rep.module_dim, 0u);
}

TEST(Reference, SplitOfDim2AdjointIsLeib) {
  const Algebra a = fixtures::leibniz_dim2();
  EXPECT_EQ(split_representation(adjoint_representation(a)).v_anti, leibniz_kernel(a));
}

TEST(Reference, Gl2IdentityUnderBothEncodings) {
  const LinearOperator sym = gl2_identity();
  EXPECT_FALSE(is_rbo_lie(sym).has_value());
  EXPECT_FALSE(is_rbo_leibniz(functor_F(sym)).has_value());
  EXPECT_TRUE(is_averaging(sym).has_value());

  const LinearOperator anti{antisymmetric_representation(sym.target(), sym.rep.left), sym.matrix};
  EXPECT_TRUE(is_rbo_leibniz(anti).has_value());
  // (u,v) = (E11,E12) gives E12 on both sides; (E12,E11) gives -E12 against E12 E11 = 0.
  const Vector e11 = unit_vector(4, 0), e12 = unit_vector(4, 1);
  EXPECT_EQ(sym.target().bracket(e11, e12), anti.rep.left_of(e11) * e12);
  EXPECT_EQ(sym.target().bracket(e12, e11), scale(-1, e12));
  EXPECT_TRUE(is_zero(anti.rep.left_of(e12) * e11));
}

TEST(Reference, Gl2DescendentBracketIsTheCommutator) {
  const LinearOperator t = functor_F(gl2_identity());
  EXPECT_EQ(descendent_bracket(t), t.target());
  const Representation r = induced_rep_on_target(t);
  // varrho(A)B = AB: the left actions are the left multiplications.
  EXPECT_EQ(r.left, gl2_identity().rep.left);
  EXPECT_TRUE(mc_check(t));
}

TEST(Reference, Gl2IdentityIsNotEquivariant) {
  // T(rho^L(A)B) = AB while [A,TB] = AB - BA.
  const EquivarianceReport r = check_equivariance(functor_F(gl2_identity()));
  EXPECT_FALSE(r.equivariant());
  EXPECT_FALSE(r.derivations.has_value());
}

TEST(Reference, PrAveragingRecoversTheLeibnizBracket) {
  const Algebra a = fixtures::leibniz_dim2();
  const LinearOperator pr = fixtures::pr_averaging(a);
  const LinearOperator f = functor_calF(pr);
  EXPECT_EQ(descendent_bracket(f), a);
  const Representation r = induced_rep_on_target(f);
  for (const auto& m : r.right) EXPECT_TRUE(m.is_zero());
}

// The averaging complex of pr is the LP complex of lambda with coefficients
// in lambda_Lie acting by [pr u, -] on the left and 0 on the right.
TEST(Reference, PrAveragingComplexIsLpWithAntisymmetricCoefficients) {
  const Algebra a = fixtures::hemisemidirect_sl2();
  const QuotientData q = canonical_lie(a);
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix m(q.quotient.dim(), q.quotient.dim());
    for (std::size_t k = 0; k < q.quotient.dim(); ++k) m += q.pr(k, i) * q.quotient.left_multiplication(k);
    left.push_back(m);
  }
  const Representation coeffs = antisymmetric_representation(a, left);
  const LinearOperator pr = fixtures::pr_averaging(a);
  for (std::size_t n = 0; n <= 1; ++n) EXPECT_EQ(averaging_coboundary(pr, n), lp_differential(coeffs, n));
}

TEST(Reference, CalGOfEnumeratedOperatorsIsAveraging) {
  const Algebra a = fixtures::leibniz_dim2();
  const Representation rep = fixtures::antisymmetric_adjoint(a);
  const QuotientData q = canonical_lie(a);
  const auto ops = enumerate_operators(rep, {-1, 0, 1}, OperatorKind::rbo_leibniz);
  int nonzero = 0;
  for (const auto& m : ops) {
    if (m.is_zero()) continue;
    ++nonzero;
    EXPECT_FALSE(is_averaging(functor_calG({rep, m}, q)).has_value());
  }
  EXPECT_GT(nonzero, 0);
}

TEST(Reference, ShuffleWithEmptyBlockIsIdentity) {
  const auto& s = shuffles({2, 0});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].perm, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(shuffles({2, 2}).size(), 6u);
}

TEST(Reference, NrBracketOnAbelianZeroRepresentationVanishes) {
  const Representation r = zero_representation(Algebra::abelian(2), 2);
  AlternatingCochain p = AlternatingCochain::zero(1, 2, 2), q = AlternatingCochain::zero(2, 2, 2);
  p.coefficients = Matrix::from_rows({{1, 2}, {3, 4}}, 2);
  q.coefficients = Matrix::from_rows({{5}, {6}}, 1);
  EXPECT_TRUE(nr_bracket(p, q, r).coefficients.is_zero());
}

TEST(Reference, McAgreesWithOperatorCheckOnRandomDim2Matrices) {
  const Representation rep = fixtures::symmetric_adjoint(fixtures::leibniz_dim2());
  std::mt19937_64 rng(80);
  for (int i = 0; i < 200; ++i) {
    const LinearOperator t{rep, testing::random_matrix(rng, 2, 2, -2, 2)};
    EXPECT_EQ(mc_check(t), !is_rbo_leibniz(t).has_value());
  }
}

TEST(Reference, BetaOfAnOperatorIsALieOperator) {
  const Algebra a = fixtures::leibniz_dim2();
  const QuotientData q = canonical_lie(a);
  const Representation rep = fixtures::symmetric_adjoint(a);
  for (const auto& m : enumerate_operators(rep, {-1, 0, 1}, OperatorKind::rbo_leibniz)) {
    const LinearOperator t{rep, m};
    const Cochain beta = gla_beta(operator_cochain(t), q);
    const LinearOperator g = functor_G(t, q);
    EXPECT_EQ(beta.tensor, q.pr * m);
    EXPECT_EQ(beta.tensor, g.matrix);
    EXPECT_FALSE(is_rbo_lie(g).has_value());
  }
}

TEST(Reference, PullbackAlongVantiInclusionRespectsTheBracket) {
  const Algebra a = fixtures::leibniz_dim2();
  const Representation v = adjoint_representation(a);
  const RepSplit s = split_representation(v);
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 5; ++trial) {
    const Cochain f = testing::random_cochain(rng, 1, 2, 2), g = testing::random_cochain(rng, 1, 2, 2);
    const Cochain lhs = cochain_pullback(s.inclusion, derived_bracket_direct(f, g, v), s.anti_rep, v);
    const Cochain rhs = derived_bracket_direct(cochain_pullback(s.inclusion, f, s.anti_rep, v),
                                               cochain_pullback(s.inclusion, g, s.anti_rep, v), s.anti_rep);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Reference, PullbacksCompose) {
  const Representation z2 = zero_representation(Algebra::abelian(2), 2);
  const Representation z3 = zero_representation(Algebra::abelian(2), 3);
  const Matrix phi = Matrix::from_rows({{1, 2, 0}, {0, 1, -1}}, 3);  // z3 -> z2
  const Matrix psi = Matrix::from_rows({{1, 0}, {1, 1}, {0, 3}}, 2); // z2 -> z3
  std::mt19937_64 rng(82);
  const Cochain f = testing::random_cochain(rng, 2, 2, 2);
  EXPECT_EQ(cochain_pullback(psi, cochain_pullback(phi, f, z3, z2), z2, z3), cochain_pullback(phi * psi, f, z2, z2));
}

}  // namespace
}  // namespace lrb
