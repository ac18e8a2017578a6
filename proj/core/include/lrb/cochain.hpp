#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrb/linalg.hpp"

namespace lrb {

std::size_t power(std::size_t base, std::size_t exponent);
std::size_t binomial(std::size_t n, std::size_t k);

/// Column of a multi-index (i_1,...,i_n): i_1 is the most significant digit.
std::size_t multi_index_column(std::span<const std::size_t> index, std::size_t dim);
std::vector<std::size_t> multi_index_of(std::size_t column, std::size_t arity, std::size_t dim);

/// How a cochain's degree relates to its arity. In Hom(V^n, W) used for the
/// derived bracket the degree is the arity; for maps g^n -> g under the
/// Balavoine bracket it is arity - 1.
enum class DegreeConvention { arity, arity_minus_one };

/// Multilinear map V^n -> W as a target_dim x domain_dim^arity matrix.
struct Cochain {
  std::size_t arity = 0;
  std::size_t domain_dim = 0;
  std::size_t target_dim = 0;
  Matrix tensor;
  DegreeConvention convention = DegreeConvention::arity;

  static Cochain zero(std::size_t arity, std::size_t domain_dim, std::size_t target_dim,
                      DegreeConvention convention = DegreeConvention::arity);
  static Cochain from_tensor(Matrix tensor, std::size_t arity, std::size_t domain_dim,
                             DegreeConvention convention = DegreeConvention::arity);

  int degree() const;
  std::size_t columns() const { return tensor.cols(); }
  /// Value on basis vectors.
  Vector at(std::span<const std::size_t> index) const;
  bool is_zero() const { return tensor.is_zero(); }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.arity == b.arity && a.domain_dim == b.domain_dim && a.target_dim == b.target_dim && a.tensor == b.tensor;
  }
};

/// f(args) for arbitrary vectors, expanding multilinearly over nonzero
/// coordinates.
Vector evaluate(const Cochain& f, std::span<const Vector> args);
/// f(e_{index[0]}, ..., v at `slot`, ...): basis vectors except one slot.
Vector evaluate_with_slot(const Cochain& f, std::span<const std::size_t> index, std::size_t slot, const Vector& v);

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator*(const Scalar& s, const Cochain& a);

/// Cochain space coordinates: entry (w, column) sits at column * target + w.
Vector vectorize(const Cochain& f);
Cochain devectorize(const Vector& v, std::size_t arity, std::size_t domain_dim, std::size_t target_dim);

/// Strictly increasing k-tuples from {0..dim-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t dim, std::size_t k);
/// Position of an increasing tuple in increasing_tuples(dim, size).
std::size_t increasing_tuple_rank(std::span<const std::size_t> tuple, std::size_t dim);

/// Hom(wedge^k V, W): coefficients on increasing tuples.
struct AlternatingCochain {
  std::size_t arity = 0;
  std::size_t domain_dim = 0;
  std::size_t target_dim = 0;
  Matrix coefficients;  // target_dim x binomial(domain_dim, arity)

  static AlternatingCochain zero(std::size_t arity, std::size_t domain_dim, std::size_t target_dim);
  friend bool operator==(const AlternatingCochain& a, const AlternatingCochain& b) {
    return a.arity == b.arity && a.domain_dim == b.domain_dim && a.coefficients == b.coefficients;
  }
};

/// The embedding Hom(wedge^k V, W) -> Hom(V^k, W): sign of the sorting
/// permutation times the coefficient; zero on repeated indices.
Cochain embed_alternating(const AlternatingCochain& f);
/// Values at the increasing tuples.
AlternatingCochain restrict_alternating(const Cochain& f);
bool is_alternating(const Cochain& f);

/// Matrix of the embedding on vectorized coordinates.
Matrix alternating_embedding_matrix(std::size_t domain_dim, std::size_t target_dim, std::size_t k);

}  // namespace lrb
