#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/linalg.hpp"
#include "lrb/operators.hpp"

namespace lrb {

/// Degrees 0..N with d_n : C^n -> C^{n+1} for n < N. Construction checks
/// shapes and d_{n+1} d_n = 0 exactly (InvariantError otherwise).
class CochainComplex {
 public:
  CochainComplex() = default;
  CochainComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials);

  /// Number of stored degrees, N + 1.
  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t top_degree() const noexcept { return dims_.empty() ? 0 : dims_.size() - 1; }
  std::size_t dim(std::size_t n) const { return dims_.at(n); }
  const Matrix& d(std::size_t n) const { return differentials_.at(n); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<Matrix>& differentials() const noexcept { return differentials_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> differentials_;
};

struct DegreeRow {
  std::size_t degree = 0;
  std::size_t dim_c = 0;
  std::size_t rank_d = 0;  // rank of d_n out of this degree
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
};

struct CohomologyReport {
  std::vector<DegreeRow> rows;
  std::size_t h(std::size_t n) const { return rows.at(n).dim_h; }
};

/// H^n for n = 0 .. top_degree - 1 (the last stored degree has no outgoing
/// differential, so its cocycles are unknown and it is not reported).
/// Ranks of distinct degrees are computed concurrently.
CohomologyReport cohomology_dims(const CochainComplex& complex);

// Differentials. Cochains in C^n(A, W) are vectorized with entry
// (multi-index I, w) at column(I) * dim W + w.

/// Loday-Pirashvili coboundary of `rep.algebra` with coefficients in `rep`.
Matrix lp_differential(const Representation& rep, std::size_t n);
/// LP coboundary of (V, [-,-]_T) in (lambda; varrho^L, varrho^R).
Matrix rbo_coboundary(const LinearOperator& t, std::size_t n);
/// The same operator assembled from its expanded display formula.
Matrix rbo_coboundary_display(const LinearOperator& t, std::size_t n);
/// Averaging operator (Lie target, rho stored symmetric): the RBO
/// coboundary of its (rho, 0) encoding.
Matrix averaging_coboundary(const LinearOperator& t, std::size_t n);
Matrix averaging_coboundary_display(const LinearOperator& t, std::size_t n);
/// Chevalley-Eilenberg differential on Hom(wedge^k g, W) for a Lie algebra
/// acting on W through `lie_rep.left`.
Matrix ce_differential(const Representation& lie_rep, std::size_t k);

// Complex builders store degrees 0..max_degree + 1, so cohomology_dims
// reports H^0..H^max_degree.
CochainComplex lp_complex(const Representation& rep, std::size_t max_degree);
CochainComplex rbo_complex(const LinearOperator& t, std::size_t max_degree);
CochainComplex averaging_complex(const LinearOperator& t, std::size_t max_degree);
/// CE complex of a Lie RBO: (V,[-,-]_T) acting on g by varrho.
CochainComplex ce_complex(const LinearOperator& lie_rbo, std::size_t max_degree);
/// LP complex of a Lie RBO: its F-image's rbo_complex.
CochainComplex lp_lie_rbo_complex(const LinearOperator& lie_rbo, std::size_t max_degree);

/// The Lie structure (V,[-,-]_T) with varrho stored symmetric.
Representation ce_coefficients(const LinearOperator& lie_rbo);

struct RelativeComplex {
  CochainComplex complex;
  std::vector<std::size_t> expected_dims;  // dim g * (dimV^k - binom(dimV, k))
};

/// Cokernel of the alternating embedding with the induced differential.
RelativeComplex relative_complex(const LinearOperator& lie_rbo, std::size_t max_degree);

/// Explicit coordinates for H^n = Z^n / B^n.
class CohomologyModel {
 public:
  /// `d_in` is d_{n-1} (nullopt in degree 0), `d_out` is d_n.
  CohomologyModel(const std::optional<Matrix>& d_in, const Matrix& d_out);

  std::size_t dim() const noexcept { return coordinates_.coordinate_map.rows(); }
  std::size_t cochain_dim() const noexcept { return cocycles_.ambient_dim(); }
  const Subspace& cocycles() const noexcept { return cocycles_; }
  /// Cocycle representing the a-th basis class.
  Vector representative(std::size_t a) const;
  /// Class of a cocycle; InvariantError if z is not closed.
  Vector classify(const Vector& z) const;
  bool is_coboundary(const Vector& z) const;

 private:
  Subspace cocycles_;
  Subspace boundaries_in_z_;
  QuotientCoordinates coordinates_;
};

}  // namespace lrb
