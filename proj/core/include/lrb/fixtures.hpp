#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/operators.hpp"

namespace lrb::fixtures {

/// Matrix Lie algebras spanned by elementary matrices.
enum class MatrixFamily { general, upper_triangular, strictly_upper };

/// gl(n), t(n) or n(n) with the commutator bracket; basis E_ij in row-major
/// order of the allowed positions.
Algebra matrix_algebra(MatrixFamily family, std::size_t n);
/// Basis matrices of matrix_algebra(family, n).
std::vector<Matrix> matrix_basis(MatrixFamily family, std::size_t n);
/// sl(2) with basis e, f, h.
Algebra sl2();

/// rho(A)B = AB on the algebra itself, stored symmetric.
Representation matrix_left_multiplication(MatrixFamily family, std::size_t n);
/// T = Id for rho(A)B = AB: a Lie relative Rota-Baxter operator.
LinearOperator matrix_identity_rbo(MatrixFamily family, std::size_t n);

/// dim 2, [e2,e2] = e1.
Algebra leibniz_dim2();
/// dim 2, [e1,e1] = e1 (fails the Leibniz identity at (1,1,1)).
Algebra non_leibniz_dim2();

/// (lambda; ad^L, -ad^L)
Representation symmetric_adjoint(const Algebra& a);
/// (lambda; ad^L, 0)
Representation antisymmetric_adjoint(const Algebra& a);

/// T = 0 on the dim-2 algebra with (ad^L, -ad^L).
LinearOperator dim2_zero_symmetric();
/// T = Id on the dim-2 algebra with (ad^L, 0).
LinearOperator dim2_identity_antisymmetric();

/// sl(2) (+) sl(2) with [(x,m),(y,n)] = ([x,y], [x,n]).
Algebra hemisemidirect_sl2();
/// T = pr : lambda -> lambda_Lie, theta(pr x) y = [x,y].
LinearOperator pr_averaging(const Algebra& leibniz);
/// T = Id on sl(2) with its adjoint representation.
LinearOperator adjoint_identity_averaging();
/// T = Id on a 2-dim abelian algebra with the zero representation.
LinearOperator abelian_identity();

struct NamedOperator {
  std::string name;
  OperatorKind kind;
  LinearOperator op;
};
/// Every built-in operator fixture, sorted by name.
std::vector<NamedOperator> builtin_operators();
/// Built-in Lie relative Rota-Baxter fixtures (gl2, n2, n3, t2, t3), by name.
std::vector<NamedOperator> lie_rbo_fixtures();

/// Built-in representations (adjoint and fixture representations).
std::vector<std::pair<std::string, Representation>> builtin_representations();
/// Random base changes and direct sums of small built-in representations,
/// all of total size dim algebra + dim module <= 6.
std::vector<Representation> random_representations(std::size_t count, std::uint64_t seed);

}  // namespace lrb::fixtures
