#include <gtest/gtest.h>

#include "lrb/errors.hpp"
#include "lrb/fixtures.hpp"
#include "lrb/quotients.hpp"
#include "support.hpp"

namespace lrb {
namespace {

TEST(LeibnizKernel, Dim2IsSpanE1) {
  const Subspace k = leibniz_kernel(fixtures::leibniz_dim2());
  EXPECT_EQ(k, Subspace::span_of_vectors({{1, 0}}, 2));
}

TEST(LeibnizKernel, ZeroForLieAlgebras) {
  EXPECT_EQ(leibniz_kernel(fixtures::sl2()).dim(), 0u);
  const QuotientData q = canonical_lie(fixtures::sl2());
  EXPECT_EQ(q.pr, Matrix::identity(3));
  EXPECT_EQ(q.section, Matrix::identity(3));
}

TEST(LeibnizKernel, ContainsSquaresAndIsTwoSidedIdealCompatible) {
  for (const Algebra& a : {fixtures::leibniz_dim2(), fixtures::hemisemidirect_sl2()}) {
    const Subspace k = leibniz_kernel(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vector e = unit_vector(a.dim(), i);
      EXPECT_TRUE(k.contains(a.bracket(e, e)));
      // Leib is killed by left multiplication.
      for (std::size_t b = 0; b < k.dim(); ++b) EXPECT_TRUE(is_zero(a.bracket(k.basis_vector(b), e)));
    }
  }
}

TEST(CanonicalLie, Dim2QuotientIsAbelianLine) {
  const QuotientData q = canonical_lie(fixtures::leibniz_dim2());
  EXPECT_EQ(q.quotient.dim(), 1u);
  EXPECT_TRUE(q.quotient.is_abelian());
  EXPECT_EQ(q.pr * q.section, Matrix::identity(1));
}

TEST(CanonicalLie, HemisemidirectQuotientIsSl2) {
  const QuotientData q = canonical_lie(fixtures::hemisemidirect_sl2());
  EXPECT_EQ(q.kernel.dim(), 3u);
  EXPECT_TRUE(q.quotient.is_lie());
  EXPECT_EQ(q.quotient, fixtures::sl2());
}

TEST(CanonicalLie, PrIsAHomomorphism) {
  const Algebra a = fixtures::hemisemidirect_sl2();
  const QuotientData q = canonical_lie(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      EXPECT_EQ(q.pr * a.bracket_basis(i, j), q.quotient.bracket(q.pr.column(i), q.pr.column(j)));
}

TEST(InducedTheta, IsALieRepresentation) {
  const Algebra a = fixtures::hemisemidirect_sl2();
  const QuotientData q = canonical_lie(a);
  const Representation theta = induced_theta(q, fixtures::antisymmetric_adjoint(a));
  EXPECT_TRUE(theta.is_symmetric());
  EXPECT_FALSE(check_lie_representation(q.quotient, theta.left).has_value());
}

TEST(InducedTheta, RejectsActionNotKillingLeib) {
  // On the dim-2 algebra, rho^L(e1) = 0 for the adjoint; a made-up action that
  // moves e1 has to be rejected.
  const Algebra a = fixtures::leibniz_dim2();
  Representation r = fixtures::antisymmetric_adjoint(a);
  r.left[0] = Matrix::identity(2);
  EXPECT_THROW(induced_theta(canonical_lie(a), r), AxiomError);
}

TEST(SplitRepresentation, AdjointOfDim2) {
  const Algebra a = fixtures::leibniz_dim2();
  const RepSplit s = split_representation(adjoint_representation(a));
  EXPECT_EQ(s.v_anti.dim(), 1u);
  EXPECT_TRUE(s.anti_rep.is_antisymmetric());
  EXPECT_TRUE(s.sym_rep.is_symmetric());
  EXPECT_EQ(s.sym_rep.module_dim, 1u);
  EXPECT_TRUE((s.projection * s.inclusion).is_zero());
}

TEST(SplitRepresentation, PropertiesOnRandomRepresentations) {
  for (const auto& r : fixtures::random_representations(30, 21)) {
    const RepSplit s = split_representation(r);
    EXPECT_TRUE(is_invariant(r, s.v_anti));
    EXPECT_TRUE(s.anti_rep.is_antisymmetric());
    EXPECT_TRUE(s.sym_rep.is_symmetric());
    EXPECT_EQ(s.anti_rep.module_dim + s.sym_rep.module_dim, r.module_dim);
    EXPECT_FALSE(check_representation(s.anti_rep).has_value());
    EXPECT_FALSE(check_representation(s.sym_rep).has_value());
    // The quotient action is the projected one.
    for (std::size_t i = 0; i < r.algebra.dim(); ++i)
      EXPECT_EQ(s.projection * r.left[i], s.sym_rep.left[i] * s.projection);
  }
}

TEST(Subrepresentation, RejectsNonInvariantSubspace) {
  const Representation r = adjoint_representation(fixtures::leibniz_dim2());
  const Subspace line = Subspace::span_of_vectors({{0, 1}}, 2);
  EXPECT_FALSE(is_invariant(r, line));
  EXPECT_THROW(subrepresentation(r, line), InvariantError);
}

}  // namespace
}  // namespace lrb
