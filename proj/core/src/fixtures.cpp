#include "lrb/fixtures.hpp"

#include <algorithm>
#include <random>

#include "lrb/errors.hpp"
#include "lrb/quotients.hpp"

namespace lrb::fixtures {

namespace {

bool allowed(MatrixFamily family, std::size_t i, std::size_t j) {
  switch (family) {
    case MatrixFamily::general: return true;
    case MatrixFamily::upper_triangular: return i <= j;
    case MatrixFamily::strictly_upper: return i < j;
  }
  return false;
}

Matrix product(const Matrix& a, const Matrix& b) { return a * b; }

// Coordinates of m in the basis `basis` (linearly independent matrices).
Vector coordinates_in(const std::vector<Matrix>& basis, const Matrix& m) {
  const std::size_t n = m.rows();
  const std::size_t d = basis.size();
  Matrix aug(n * n, d + 1);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < n * n; ++r) aug(r, k) = basis[k](r / n, r % n);
  for (std::size_t r = 0; r < n * n; ++r) aug(r, d) = m(r / n, r % n);
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == d) throw InvariantError("matrix is outside the span of the basis");
  Vector c(d);
  for (std::size_t p = 0; p < e.pivots.size(); ++p) c[e.pivots[p]] = e.reduced(p, d);
  return c;
}

Algebra commutator_algebra(const std::vector<Matrix>& basis, std::vector<std::string> names) {
  const std::size_t d = basis.size();
  std::vector<Vector> brackets(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) brackets[i * d + j] = coordinates_in(basis, commutator(basis[i], basis[j]));
  return Algebra(std::move(names), std::move(brackets));
}

std::vector<std::string> matrix_names(MatrixFamily family, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (allowed(family, i, j)) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  return names;
}

std::vector<Matrix> left_multiplications(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.left_multiplication(i));
  return out;
}

}  // namespace

std::vector<Matrix> matrix_basis(MatrixFamily family, std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (allowed(family, i, j)) {
        Matrix e(n, n);
        e(i, j) = 1;
        basis.push_back(std::move(e));
      }
  return basis;
}

Algebra matrix_algebra(MatrixFamily family, std::size_t n) {
  return commutator_algebra(matrix_basis(family, n), matrix_names(family, n));
}

Algebra sl2() {
  Matrix e(2, 2), f(2, 2), h(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  h(0, 0) = 1;
  h(1, 1) = -1;
  return commutator_algebra({e, f, h}, {"e", "f", "h"});
}

Representation matrix_left_multiplication(MatrixFamily family, std::size_t n) {
  const auto basis = matrix_basis(family, n);
  const Algebra a = matrix_algebra(family, n);
  const std::size_t d = basis.size();
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) m.set_column(j, coordinates_in(basis, product(basis[i], basis[j])));
    rho.push_back(std::move(m));
  }
  return symmetric_representation(a, std::move(rho));
}

LinearOperator matrix_identity_rbo(MatrixFamily family, std::size_t n) {
  Representation rep = matrix_left_multiplication(family, n);
  const std::size_t d = rep.module_dim;
  return LinearOperator{std::move(rep), Matrix::identity(d)};
}

Algebra leibniz_dim2() {
  std::vector<Vector> b(4, Vector(2));
  b[1 * 2 + 1][0] = 1;
  return Algebra(Algebra::default_names(2), std::move(b));
}

Algebra non_leibniz_dim2() {
  std::vector<Vector> b(4, Vector(2));
  b[0][0] = 1;
  return Algebra(Algebra::default_names(2), std::move(b));
}

Representation symmetric_adjoint(const Algebra& a) { return symmetric_representation(a, left_multiplications(a)); }

Representation antisymmetric_adjoint(const Algebra& a) {
  return antisymmetric_representation(a, left_multiplications(a));
}

LinearOperator dim2_zero_symmetric() { return LinearOperator{symmetric_adjoint(leibniz_dim2()), Matrix(2, 2)}; }

LinearOperator dim2_identity_antisymmetric() {
  return LinearOperator{antisymmetric_adjoint(leibniz_dim2()), Matrix::identity(2)};
}

Algebra hemisemidirect_sl2() {
  const Algebra g = sl2();
  Algebra a = semidirect_product(antisymmetric_adjoint(g));
  std::vector<std::string> names = {"e", "f", "h", "me", "mf", "mh"};
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) brackets.push_back(a.bracket_basis(i, j));
  return Algebra(std::move(names), std::move(brackets));
}

LinearOperator pr_averaging(const Algebra& leibniz) {
  const LinearOperator id{antisymmetric_adjoint(leibniz), Matrix::identity(leibniz.dim())};
  return functor_calG(id, canonical_lie(leibniz));
}

LinearOperator adjoint_identity_averaging() {
  const Algebra g = sl2();
  return LinearOperator{symmetric_adjoint(g), Matrix::identity(g.dim())};
}

LinearOperator abelian_identity() {
  return LinearOperator{zero_representation(Algebra::abelian(2), 2), Matrix::identity(2)};
}

std::vector<NamedOperator> lie_rbo_fixtures() {
  using F = MatrixFamily;
  return {
      {"gl2", OperatorKind::rbo_lie, matrix_identity_rbo(F::general, 2)},
      {"n2", OperatorKind::rbo_lie, matrix_identity_rbo(F::strictly_upper, 2)},
      {"n3", OperatorKind::rbo_lie, matrix_identity_rbo(F::strictly_upper, 3)},
      {"t2", OperatorKind::rbo_lie, matrix_identity_rbo(F::upper_triangular, 2)},
      {"t3", OperatorKind::rbo_lie, matrix_identity_rbo(F::upper_triangular, 3)},
  };
}

std::vector<NamedOperator> builtin_operators() {
  std::vector<NamedOperator> out = lie_rbo_fixtures();
  out.push_back({"abelian-identity", OperatorKind::rbo_leibniz, abelian_identity()});
  out.push_back({"adjoint-identity", OperatorKind::averaging, adjoint_identity_averaging()});
  out.push_back({"dim2-identity-anti", OperatorKind::rbo_leibniz, dim2_identity_antisymmetric()});
  out.push_back({"dim2-zero-sym", OperatorKind::rbo_leibniz, dim2_zero_symmetric()});
  out.push_back({"hemisemidirect-pr", OperatorKind::averaging, pr_averaging(hemisemidirect_sl2())});
  out.push_back({"pr", OperatorKind::averaging, pr_averaging(leibniz_dim2())});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::vector<std::pair<std::string, Representation>> builtin_representations() {
  const Algebra d2 = leibniz_dim2();
  return {
      {"dim2-adjoint", adjoint_representation(d2)},
      {"dim2-anti", antisymmetric_adjoint(d2)},
      {"dim2-sym", symmetric_adjoint(d2)},
      {"dim2-zero", zero_representation(d2, 1)},
      {"gl2-left", matrix_left_multiplication(MatrixFamily::general, 2)},
      {"n3-left", matrix_left_multiplication(MatrixFamily::strictly_upper, 3)},
      {"sl2-adjoint", symmetric_adjoint(sl2())},
      {"t2-left", matrix_left_multiplication(MatrixFamily::upper_triangular, 2)},
  };
}

namespace {

// Unit lower times unit upper triangular: always invertible.
Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = dist(rng);
      u(j, i) = dist(rng);
    }
  return l * u;
}

}  // namespace

std::vector<Representation> random_representations(std::size_t count, std::uint64_t seed) {
  const Algebra d2 = leibniz_dim2();
  const Algebra g = sl2();
  const Algebra t2 = matrix_algebra(MatrixFamily::upper_triangular, 2);
  std::vector<Representation> pool = {
      adjoint_representation(d2),
      symmetric_adjoint(d2),
      antisymmetric_adjoint(d2),
      zero_representation(d2, 1),
      direct_sum(symmetric_adjoint(d2), antisymmetric_adjoint(d2)),
      direct_sum(adjoint_representation(d2), zero_representation(d2, 1)),
      symmetric_adjoint(g),
      antisymmetric_adjoint(g),
      adjoint_representation(t2),
      matrix_left_multiplication(MatrixFamily::upper_triangular, 2),
      matrix_left_multiplication(MatrixFamily::strictly_upper, 3),
  };
  std::mt19937_64 rng(seed);
  std::vector<Representation> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Representation& base = pool[k % pool.size()];
    out.push_back(change_basis(base, random_invertible(rng, base.algebra.dim()), random_invertible(rng, base.module_dim)));
  }
  return out;
}

}  // namespace lrb::fixtures
