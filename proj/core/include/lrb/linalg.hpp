#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrb/rational.hpp"

namespace lrb {

using Vector = std::vector<Scalar>;

/// Dense row-major rational matrix. Shape is fixed at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);
/// Zero entries of the left factor are skipped, which keeps products of
/// coboundary matrices cheap.
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Matrix kronecker(const Matrix& a, const Matrix& b);
/// Block-diagonal copies of `block`: I_count (x) block.
Matrix block_diagonal(const Matrix& block, std::size_t count);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
Vector unit_vector(std::size_t dim, std::size_t i);

/// Reduced row-echelon form plus pivot columns; rank = pivots.size().
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free elimination on integer-scaled rows; the result is
/// normalized to the unique RREF. `reduced` holds only the rank nonzero
/// rows. Rows with a zero in the pivot column are never touched.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of Q^n stored by a basis in reduced row-echelon form, so two
/// subspaces are equal iff their stored bases are entrywise equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `rows`.
  static Subspace span_of_rows(const Matrix& rows);
  static Subspace span_of_vectors(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  /// Rows are the RREF basis vectors.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix inclusion() const { return basis_.transpose(); }

  /// Coordinates with respect to basis(), or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space; dim = cols - rank.
Subspace kernel_basis(const Matrix& m);
Subspace column_space(const Matrix& m);

struct QuotientCoordinates {
  /// ambient x q: the standard basis vectors at the non-pivot columns of the
  /// subspace, as columns.
  Matrix complement;
  /// q x ambient: sends a vector to its coordinates in ambient / sub.
  Matrix coordinate_map;
};

QuotientCoordinates quotient_coordinates(std::size_t ambient_dim, const Subspace& sub);

}  // namespace lrb
