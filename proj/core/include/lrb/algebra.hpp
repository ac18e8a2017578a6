#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lrb/linalg.hpp"

namespace lrb {

/// A failed identity: which axiom, on which basis indices (0-based here,
/// 1-based in describe()), and both sides.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;

  std::string describe() const;
};

/// Empty when the property holds.
using Check = std::optional<Violation>;

/// Finite-dimensional algebra with bilinear bracket
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Construction does not validate; use
/// check_leibniz / validate_leibniz.
class Algebra {
 public:
  Algebra() = default;
  /// `brackets[i * dim + j]` is [e_i, e_j] in coordinates.
  Algebra(std::vector<std::string> basis_names, std::vector<Vector> brackets);

  static Algebra abelian(std::size_t dim);
  static std::vector<std::string> default_names(std::size_t dim);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return brackets_[i * dim() + j][k]; }
  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;

  /// y -> [e_i, y]
  Matrix left_multiplication(std::size_t i) const;
  /// y -> [y, e_i]
  Matrix right_multiplication(std::size_t i) const;

  /// Antisymmetric and Jacobi; computed once at construction.
  bool is_lie() const noexcept { return is_lie_; }
  bool is_abelian() const;

  /// Same structure constants in the basis given by the columns of `p`
  /// (invertible): new e'_a = sum_i p(i,a) e_i.
  Algebra change_basis(const Matrix& p) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.names_.size() == b.names_.size() && a.brackets_ == b.brackets_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Vector> brackets_;
  bool is_lie_ = true;
};

/// Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] on basis triples.
Check check_leibniz(const Algebra& a);
/// Antisymmetry on basis pairs, then Jacobi on basis triples.
Check check_jacobi_antisymmetry(const Algebra& a);
/// Throws AxiomError carrying the witness.
void validate_leibniz(const Algebra& a);

Matrix invert(const Matrix& m);

enum class RepClass { symmetric, antisymmetric, general };
std::string to_string(RepClass c);

/// (V; rho^L, rho^R): left[i] and right[i] are the actions of e_i.
struct Representation {
  Algebra algebra;
  std::size_t module_dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  /// sum_i x_i left[i]
  Matrix left_of(const Vector& x) const;
  Matrix right_of(const Vector& x) const;

  bool is_symmetric() const;
  bool is_antisymmetric() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra == b.algebra && a.module_dim == b.module_dim && a.left == b.left && a.right == b.right;
  }
};

/// Throws DimensionError on shape mismatch.
void check_shapes(const Representation& r);

Representation adjoint_representation(const Algebra& a);
Representation zero_representation(const Algebra& a, std::size_t module_dim);
/// (V; rho, -rho) from a Lie representation rho.
Representation symmetric_representation(const Algebra& a, std::vector<Matrix> rho);
/// (V; rho, 0)
Representation antisymmetric_representation(const Algebra& a, std::vector<Matrix> rho);

Check check_representation(const Representation& r);
void validate_representation(const Representation& r);
/// Symmetric takes precedence when both R = -L and R = 0 (the zero action).
RepClass classify_representation(const Representation& r);

/// Axioms of a Lie representation: rho([x,y]) = [rho(x), rho(y)] with rho = left.
Check check_lie_representation(const Algebra& a, const std::vector<Matrix>& rho);

/// lambda (+) V with [x+u, y+v] = [x,y] + rho^L(x)v + rho^R(y)u.
Algebra semidirect_product(const Representation& r);

/// Moves the algebra basis by `p_alg` and the module basis by `p_mod`.
Representation change_basis(const Representation& r, const Matrix& p_alg, const Matrix& p_mod);

/// Direct sum of two representations of the same algebra.
Representation direct_sum(const Representation& a, const Representation& b);

Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace lrb
