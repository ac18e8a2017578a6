#pragma once

#include <optional>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/quotients.hpp"

namespace lrb {

/// T : V -> lambda, where V carries `rep` and lambda is rep.algebra.
struct LinearOperator {
  Representation rep;
  Matrix matrix;  // dim lambda x dim V

  const Algebra& target() const noexcept { return rep.algebra; }
  std::size_t source_dim() const noexcept { return rep.module_dim; }
};

/// Throws DimensionError when T does not fit the representation.
void check_shapes(const LinearOperator& t);

/// [Tu,Tv] = T(rho^L(Tu)v + rho^R(Tv)u)
Check is_rbo_leibniz(const LinearOperator& t);
/// Lie target, rho stored symmetric: [Tu,Tv] = T(rho(Tu)v - rho(Tv)u).
/// Throws InputError on a non-Lie target or non-symmetric storage.
Check is_rbo_lie(const LinearOperator& t);
/// Lie target, rho stored symmetric: [Tu,Tv] = T(rho(Tu)v).
Check is_averaging(const LinearOperator& t);

/// [u,v]_T = rho^L(Tu)v + rho^R(Tv)u. Throws AxiomError for non-operators.
Algebra descendent_bracket(const LinearOperator& t);
/// Same bracket without the operator check.
Algebra descendent_bracket_unchecked(const LinearOperator& t);

/// (lambda; varrho^L, varrho^R) over (V, [-,-]_T):
/// varrho^L(u)x = [Tu,x] - T rho^R(x)u, varrho^R(u)x = [x,Tu] - T rho^L(x)u.
Representation induced_rep_on_target(const LinearOperator& t);
Representation induced_rep_on_target_unchecked(const LinearOperator& t);

/// Lie RBO -> Leibniz RBO for (rho, -rho). Data are unchanged.
LinearOperator functor_F(const LinearOperator& lie_rbo);
/// Averaging operator -> Leibniz RBO for (rho, 0).
LinearOperator functor_calF(const LinearOperator& averaging);
/// pr o T over (V; theta), theta stored symmetric. G needs a symmetric rep,
/// calG an antisymmetric one.
LinearOperator functor_G(const LinearOperator& t, const QuotientData& q);
LinearOperator functor_calG(const LinearOperator& t, const QuotientData& q);

struct OperatorHomomorphism {
  Matrix phi;     // lambda -> lambda'
  Matrix varphi;  // V -> V'
};

/// T' varphi = phi T, varphi rho^L(Tu)v = rho'^L(T'varphi u)varphi v and
/// the same for rho^R, plus phi a bracket homomorphism.
Check check_operator_homomorphism(const OperatorHomomorphism& h, const LinearOperator& t,
                                  const LinearOperator& t2);

struct EquivarianceReport {
  Check left;   // T(rho^L(x)v) = [x,Tv]
  Check right;  // T(rho^R(x)v) = [Tv,x]
  /// Set only when both equivariance identities hold.
  std::optional<Check> derivations;

  bool equivariant() const { return !left && !right; }
};

EquivarianceReport check_equivariance(const LinearOperator& t);

enum class OperatorKind { rbo_leibniz, rbo_lie, averaging };

Check check_operator(const LinearOperator& t, OperatorKind kind);

/// All matrices with entries in `entries` satisfying `kind`, in
/// lexicographic order of their row-major entry indices.
std::vector<Matrix> enumerate_operators(const Representation& rep, const std::vector<Scalar>& entries,
                                        OperatorKind kind);

}  // namespace lrb
