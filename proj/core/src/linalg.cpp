#include "lrb/linalg.hpp"

#include <algorithm>
#include <utility>

#include "lrb/errors.hpp"

namespace lrb {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("Matrix::from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("Matrix::set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return lrb::is_zero(s); });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  // Precompute the nonzero pattern of b's rows once.
  std::vector<std::vector<std::size_t>> nz(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!is_zero(b(k, j))) nz[k].push_back(j);
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j : nz[k]) {
        t = aik * b(k, j);
        out(i, j) += t;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  Vector out(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_zero(v[c])) continue;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (!is_zero(a(r, c))) out[r] += a(r, c) * v[c];
    }
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix block_diagonal(const Matrix& block, std::size_t count) {
  Matrix out(block.rows() * count, block.cols() * count);
  for (std::size_t n = 0; n < count; ++n)
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) out(n * block.rows() + r, n * block.cols() + c) = block(r, c);
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row by the lcm of its denominators and divides out the
// content. Returns false for a zero row.
bool to_primitive_integer_row(const Scalar* src, std::size_t cols, IntRow& out) {
  mpz_class den = 1;
  bool nonzero = false;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_zero(src[c])) continue;
    nonzero = true;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), src[c].get_den_mpz_t());
  }
  if (!nonzero) return false;
  out.assign(cols, mpz_class(0));
  mpz_class content = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_zero(src[c])) continue;
    mpz_divexact(out[c].get_mpz_t(), den.get_mpz_t(), src[c].get_den_mpz_t());
    out[c] *= src[c].get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[c].get_mpz_t());
  }
  if (content != 1) {
    for (auto& x : out)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return true;
}

void make_primitive(IntRow& row, std::size_t from) {
  mpz_class content = 0;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[c].get_mpz_t());
    if (content == 1) return;
  }
  if (content == 0 || content == 1) return;
  for (std::size_t c = from; c < row.size(); ++c)
    if (row[c] != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), content.get_mpz_t());
}

// row := a*row - b*pivot on columns >= from (pivot is zero before `from`).
void combine(IntRow& row, const IntRow& pivot, const mpz_class& a, const mpz_class& b, std::size_t from) {
  mpz_class t;
  for (std::size_t c = from; c < row.size(); ++c) {
    const bool pz = pivot[c] == 0;
    if (row[c] == 0 && pz) continue;
    if (a != 1) row[c] *= a;
    if (!pz) {
      t = b * pivot[c];
      row[c] -= t;
    }
  }
}

struct IntegerEchelon {
  std::vector<IntRow> rows;  // first `pivots.size()` rows are the pivot rows
  std::vector<std::size_t> pivots;
};

IntegerEchelon eliminate(const Matrix& m, bool reduce_above) {
  IntegerEchelon e;
  const std::size_t cols = m.cols();
  if (cols == 0) return e;
  {
    IntRow r;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (to_primitive_integer_row(&m(i, 0), cols, r)) e.rows.push_back(std::move(r));
  }
  std::size_t next = 0;
  mpz_class a, b, g;
  for (std::size_t c = 0; c < cols && next < e.rows.size(); ++c) {
    // Pick the candidate with the smallest pivot entry to limit growth.
    std::size_t best = e.rows.size();
    for (std::size_t r = next; r < e.rows.size(); ++r) {
      if (e.rows[r][c] == 0) continue;
      if (best == e.rows.size() || mpz_cmpabs(e.rows[r][c].get_mpz_t(), e.rows[best][c].get_mpz_t()) < 0) best = r;
      if (abs(e.rows[best][c]) == 1) break;
    }
    if (best == e.rows.size()) continue;
    std::swap(e.rows[next], e.rows[best]);
    const IntRow& pivot = e.rows[next];
    const std::size_t begin = reduce_above ? 0 : next + 1;
    for (std::size_t r = begin; r < e.rows.size(); ++r) {
      if (r == next || e.rows[r][c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), pivot[c].get_mpz_t(), e.rows[r][c].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), pivot[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), e.rows[r][c].get_mpz_t(), g.get_mpz_t());
      // Rows above the pivot still carry their own pivot before column c.
      const std::size_t from = r < next ? e.pivots[r] : c;
      combine(e.rows[r], pivot, a, b, from);
      make_primitive(e.rows[r], from);
    }
    e.pivots.push_back(c);
    ++next;
    // Drop rows that became zero so later pivot searches stay short.
    std::size_t keep = next;
    for (std::size_t r = next; r < e.rows.size(); ++r) {
      bool zero = true;
      for (std::size_t j = c + 1; j < cols && zero; ++j) zero = e.rows[r][j] == 0;
      if (!zero) {
        if (keep != r) std::swap(e.rows[keep], e.rows[r]);
        ++keep;
      }
    }
    e.rows.resize(keep);
  }
  e.rows.resize(e.pivots.size());
  return e;
}

}  // namespace

Echelon rref(const Matrix& m) {
  IntegerEchelon e = eliminate(m, /*reduce_above=*/true);
  Echelon out{Matrix(e.pivots.size(), m.cols()), e.pivots};
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const mpz_class& p = e.rows[r][e.pivots[r]];
    for (std::size_t c = e.pivots[r]; c < m.cols(); ++c) {
      if (e.rows[r][c] == 0) continue;
      Scalar q(e.rows[r][c], p);
      q.canonicalize();
      out.reduced(r, c) = std::move(q);
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminating the shorter side is cheaper.
  if (m.rows() < m.cols()) return eliminate(m.transpose(), false).pivots.size();
  return eliminate(m, false).pivots.size();
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace Subspace::span_of_rows(const Matrix& rows) {
  Subspace s(rows.cols());
  Echelon e = rref(rows);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span_of_vectors(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return span_of_rows(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) { return span_of_rows(Matrix::identity(ambient_dim)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("Subspace::coordinates: length mismatch");
  Vector coords(dim());
  Vector residual(v);
  for (std::size_t r = 0; r < dim(); ++r) {
    coords[r] = residual[pivots_[r]];
    if (is_zero(coords[r])) continue;
    for (std::size_t c = pivots_[r]; c < ambient_dim_; ++c)
      if (!lrb::is_zero(basis_(r, c))) residual[c] -= coords[r] * basis_(r, c);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span_of_vectors(vectors, m.cols());
}

Subspace column_space(const Matrix& m) { return Subspace::span_of_rows(m.transpose()); }

QuotientCoordinates quotient_coordinates(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) throw DimensionError("quotient_coordinates: ambient dimension mismatch");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free.push_back(c);

  QuotientCoordinates q{Matrix(ambient_dim, free.size()), Matrix(free.size(), ambient_dim)};
  for (std::size_t a = 0; a < free.size(); ++a) {
    q.complement(free[a], a) = 1;
    q.coordinate_map(a, free[a]) = 1;
    // v - sum_r v[p_r] * row_r has zeros at every pivot; read off the rest.
    for (std::size_t r = 0; r < sub.dim(); ++r) q.coordinate_map(a, sub.pivots()[r]) = -sub.basis()(r, free[a]);
  }
  return q;
}

}  // namespace lrb
