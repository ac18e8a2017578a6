#include <gtest/gtest.h>

#include "lrb/cohomology.hpp"
#include "lrb/errors.hpp"
#include "lrb/fixtures.hpp"
#include "lrb/operators.hpp"
#include "support.hpp"

namespace lrb {
namespace {

using testing::random_cochain;

std::vector<Vector> basis_args(const std::vector<std::size_t>& idx, std::size_t dim) {
  std::vector<Vector> out;
  for (auto i : idx) out.push_back(unit_vector(dim, i));
  return out;
}

// Loday-Pirashvili coboundary evaluated directly on vectors:
// sum_{i<=n} (-1)^{i+1} L(x_i) f(.. x_i^ ..) + (-1)^{n+1} R(x_{n+1}) f(x_1..x_n)
//   + sum_{i<j} (-1)^i f(.. x_i^ .., [x_i,x_j], ..)
Vector lp_by_hand(const Representation& r, const Cochain& f, const std::vector<Vector>& x) {
  const std::size_t n = f.arity;
  Vector out(r.module_dim);
  auto without = [&](std::size_t i) {
    std::vector<Vector> a;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (k != i) a.push_back(x[k]);
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar s = i % 2 ? -1 : 1;  // (-1)^{(i+1)+1}
    out = add(out, scale(s, r.left_of(x[i]) * evaluate(f, without(i))));
  }
  out = add(out, scale(n % 2 ? 1 : -1, r.right_of(x[n]) * evaluate(f, without(n))));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      std::vector<Vector> a;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == i) continue;
        a.push_back(k == j ? r.algebra.bracket(x[i], x[j]) : x[k]);
      }
      out = add(out, scale(i % 2 ? 1 : -1, evaluate(f, a)));
    }
  return out;
}

// Chevalley-Eilenberg: sum (-1)^{i+1} rho(x_i) f(.. x_i^ ..) + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x_i^ .. x_j^ ..)
Vector ce_by_hand(const Representation& r, const Cochain& f, const std::vector<Vector>& x) {
  Vector out(r.module_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<Vector> a;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (k != i) a.push_back(x[k]);
    out = add(out, scale(i % 2 ? -1 : 1, r.left_of(x[i]) * evaluate(f, a)));
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      std::vector<Vector> a{r.algebra.bracket(x[i], x[j])};
      for (std::size_t k = 0; k < x.size(); ++k)
        if (k != i && k != j) a.push_back(x[k]);
      out = add(out, scale((i + j) % 2 ? -1 : 1, evaluate(f, a)));
    }
  return out;
}

Vector alt_vector(const AlternatingCochain& a) {
  Vector v;
  for (std::size_t c = 0; c < a.coefficients.cols(); ++c)
    for (std::size_t r = 0; r < a.coefficients.rows(); ++r) v.push_back(a.coefficients(r, c));
  return v;
}

LinearOperator zero_operator_on_abelian(std::size_t g, std::size_t v) {
  return {symmetric_representation(Algebra::abelian(g), std::vector<Matrix>(g, Matrix(v, v))), Matrix(g, v)};
}

TEST(LpDifferential, DegreeZeroIsMinusRightAction) {
  const Representation r = adjoint_representation(fixtures::leibniz_dim2());
  const Matrix d0 = lp_differential(r, 0);
  ASSERT_EQ(d0.rows(), 4u);
  ASSERT_EQ(d0.cols(), 2u);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t w = 0; w < 2; ++w)
      for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(d0(x * 2 + w, a), -r.right[x](w, a));
}

TEST(LpDifferential, AgreesWithDirectEvaluation) {
  std::mt19937_64 rng(60);
  auto reps = fixtures::random_representations(12, 61);
  for (const auto& [name, r] : fixtures::builtin_representations())
    if (r.algebra.dim() <= 3) reps.push_back(r);
  for (const auto& r : reps) {
    for (std::size_t n = 0; n <= 2; ++n) {
      const Cochain f = random_cochain(rng, n, r.algebra.dim(), r.module_dim);
      const Cochain df = devectorize(lp_differential(r, n) * vectorize(f), n + 1, r.algebra.dim(), r.module_dim);
      for (std::size_t c = 0; c < df.columns(); ++c) {
        const auto idx = multi_index_of(c, n + 1, r.algebra.dim());
        EXPECT_EQ(df.tensor.column(c), lp_by_hand(r, f, basis_args(idx, r.algebra.dim())));
      }
    }
  }
}

TEST(LpDifferential, SquaresToZero) {
  for (const auto& r : fixtures::random_representations(15, 62))
    for (std::size_t n = 0; n <= 2; ++n) EXPECT_TRUE((lp_differential(r, n + 1) * lp_differential(r, n)).is_zero());
}

TEST(CeDifferential, AgreesWithDirectEvaluation) {
  std::mt19937_64 rng(63);
  for (const auto& f : fixtures::lie_rbo_fixtures()) {
    const Representation c = ce_coefficients(f.op);
    const std::size_t dv = c.algebra.dim(), dw = c.module_dim;
    if (dv > 4) continue;
    for (std::size_t k = 0; k <= 2; ++k) {
      AlternatingCochain a = AlternatingCochain::zero(k, dv, dw);
      std::uniform_int_distribution<int> d(-2, 2);
      for (std::size_t i = 0; i < a.coefficients.rows(); ++i)
        for (std::size_t j = 0; j < a.coefficients.cols(); ++j) a.coefficients(i, j) = d(rng);
      const Vector got = ce_differential(c, k) * alt_vector(a);
      const Cochain full = embed_alternating(a);
      const auto tuples = increasing_tuples(dv, k + 1);
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const Vector expect = ce_by_hand(c, full, basis_args(tuples[t], dv));
        for (std::size_t w = 0; w < dw; ++w) EXPECT_EQ(got[t * dw + w], expect[w]) << f.name << " k=" << k;
      }
    }
  }
}

TEST(CeDifferential, EmbeddingIsAChainMapIntoLp) {
  for (const auto& f : fixtures::lie_rbo_fixtures()) {
    const Representation ce = ce_coefficients(f.op);
    const Representation lp = induced_rep_on_target(functor_F(f.op));
    const std::size_t dv = ce.algebra.dim(), dw = ce.module_dim;
    if (dv > 4) continue;
    for (std::size_t k = 0; k <= 2; ++k)
      EXPECT_EQ(lp_differential(lp, k) * alternating_embedding_matrix(dv, dw, k),
                alternating_embedding_matrix(dv, dw, k + 1) * ce_differential(ce, k))
          << f.name << " k=" << k;
  }
}

TEST(Complexes, TrivialCoefficientsGiveBinomialDims) {
  const LinearOperator t = zero_operator_on_abelian(2, 3);
  const CohomologyReport ce = cohomology_dims(ce_complex(t, 3));
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(ce.h(k), binomial(3, k) * 2);
  const CohomologyReport lp = cohomology_dims(lp_lie_rbo_complex(t, 2));
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(lp.h(k), power(3, k) * 2);
}

TEST(Complexes, DegreeConventionAndRowBookkeeping) {
  const CochainComplex c = rbo_complex(fixtures::dim2_zero_symmetric(), 2);
  EXPECT_EQ(c.size(), 4u);
  const CohomologyReport r = cohomology_dims(c);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.dim_c, c.dim(row.degree));
    EXPECT_EQ(row.dim_z, row.dim_c - row.rank_d);
    EXPECT_EQ(row.dim_h, row.dim_z - row.dim_b);
    EXPECT_EQ(row.dim_b, row.degree == 0 ? 0 : testing::textbook_rank(c.d(row.degree - 1)));
  }
}

TEST(Complexes, ConstructorRejectsNonComplexes) {
  const Matrix d0 = Matrix::from_rows({{1}}, 1);
  EXPECT_THROW(CochainComplex({1, 1, 1}, {d0, d0}), InvariantError);
  EXPECT_THROW(CochainComplex({1, 2}, {d0}), InvariantError);
  EXPECT_NO_THROW(CochainComplex({1, 1, 1}, {d0, Matrix(1, 1)}));
}

TEST(RboCoboundary, DisplayFormulaMatches) {
  for (const auto& f : fixtures::builtin_operators()) {
    if (f.op.source_dim() > 3) continue;
    for (std::size_t n = 0; n <= 2; ++n) {
      if (f.kind == OperatorKind::averaging)
        EXPECT_EQ(averaging_coboundary(f.op, n), averaging_coboundary_display(f.op, n)) << f.name;
      else if (f.kind == OperatorKind::rbo_leibniz)
        EXPECT_EQ(rbo_coboundary(f.op, n), rbo_coboundary_display(f.op, n)) << f.name;
    }
  }
}

TEST(RelativeComplex, DimensionsFollowTheCount) {
  for (const auto& f : fixtures::lie_rbo_fixtures()) {
    if (f.op.source_dim() > 4) continue;
    const RelativeComplex rc = relative_complex(f.op, 2);
    const std::size_t g = f.op.target().dim(), v = f.op.source_dim();
    for (std::size_t k = 0; k < rc.complex.size(); ++k) {
      EXPECT_EQ(rc.complex.dim(k), g * (power(v, k) - binomial(v, k))) << f.name;
      EXPECT_EQ(rc.expected_dims[k], rc.complex.dim(k));
    }
    EXPECT_EQ(rc.complex.dim(0), 0u);
    EXPECT_EQ(rc.complex.dim(1), 0u);
    if (v == 2) EXPECT_EQ(rc.complex.dim(2), 3 * g);
  }
}

TEST(CohomologyModel, RepresentativesAndClasses) {
  const CochainComplex c = lp_complex(adjoint_representation(fixtures::leibniz_dim2()), 3);
  for (std::size_t n = 0; n + 1 < c.size(); ++n) {
    std::optional<Matrix> d_in;
    if (n > 0) d_in = c.d(n - 1);
    const CohomologyModel m(d_in, c.d(n));
    EXPECT_EQ(m.dim(), cohomology_dims(c).h(n));
    for (std::size_t a = 0; a < m.dim(); ++a) {
      const Vector z = m.representative(a);
      EXPECT_TRUE(is_zero(c.d(n) * z));
      EXPECT_EQ(m.classify(z), unit_vector(m.dim(), a));
      EXPECT_FALSE(m.is_coboundary(z));
      if (n > 0) {
        // Adding a coboundary keeps the class.
        Vector b(c.dim(n - 1), Scalar(1));
        EXPECT_EQ(m.classify(add(z, c.d(n - 1) * b)), unit_vector(m.dim(), a));
      }
    }
    if (m.cocycles().dim() < c.dim(n)) {
      // Some basis vector is not closed.
      for (std::size_t i = 0; i < c.dim(n); ++i) {
        const Vector e = unit_vector(c.dim(n), i);
        if (!is_zero(c.d(n) * e)) {
          EXPECT_THROW(m.classify(e), InvariantError);
          break;
        }
      }
    }
  }
}

TEST(CeComplex, RejectsNonLieInputs) {
  EXPECT_THROW(ce_complex(fixtures::dim2_zero_symmetric(), 1), InputError);
}

}  // namespace
}  // namespace lrb
