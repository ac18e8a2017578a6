#include "lrb/algebra.hpp"

#include <sstream>

#include "lrb/errors.hpp"

namespace lrb {
namespace {

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Violation matrix_violation(std::string axiom, std::vector<std::size_t> idx, const Matrix& lhs, const Matrix& rhs) {
  return Violation{std::move(axiom), std::move(idx), flatten(lhs), flatten(rhs)};
}

bool compute_is_lie(const Algebra& a) { return !check_jacobi_antisymmetry(a).has_value(); }

}  // namespace

std::string Violation::describe() const {
  std::ostringstream out;
  out << axiom << " fails at (";
  for (std::size_t i = 0; i < indices.size(); ++i) out << (i ? "," : "") << indices[i] + 1;
  out << "): lhs " << vector_text(lhs) << " rhs " << vector_text(rhs);
  return out.str();
}

Algebra::Algebra(std::vector<std::string> basis_names, std::vector<Vector> brackets)
    : names_(std::move(basis_names)), brackets_(std::move(brackets)) {
  const std::size_t n = names_.size();
  if (brackets_.size() != n * n) throw DimensionError("Algebra: expected dim^2 bracket vectors");
  for (const auto& b : brackets_)
    if (b.size() != n) throw DimensionError("Algebra: bracket vector has wrong length");
  is_lie_ = compute_is_lie(*this);
}

std::vector<std::string> Algebra::default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

Algebra Algebra::abelian(std::size_t dim) {
  return Algebra(default_names(dim), std::vector<Vector>(dim * dim, Vector(dim)));
}

Vector Algebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionError("bracket: argument length");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (is_zero(y[j])) continue;
      const Scalar coeff = x[i] * y[j];
      const Vector& b = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (!is_zero(b[k])) out[k] += coeff * b[k];
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket_basis(i, j));
  return m;
}

Matrix Algebra::right_multiplication(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket_basis(j, i));
  return m;
}

bool Algebra::is_abelian() const {
  for (const auto& b : brackets_)
    if (!lrb::is_zero(b)) return false;
  return true;
}

Algebra Algebra::change_basis(const Matrix& p) const {
  if (p.rows() != dim() || p.cols() != dim()) throw DimensionError("change_basis: matrix must be dim x dim");
  const Matrix inv = invert(p);
  std::vector<Vector> brackets(dim() * dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) brackets[a * dim() + b] = inv * bracket(p.column(a), p.column(b));
  return Algebra(names_, std::move(brackets));
}

Check check_leibniz(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = a.bracket(unit_vector(n, i), a.bracket_basis(j, k));
        const Vector rhs = add(a.bracket(a.bracket_basis(i, j), unit_vector(n, k)),
                               a.bracket(unit_vector(n, j), a.bracket_basis(i, k)));
        if (lhs != rhs) return Violation{"Leibniz identity", {i, j, k}, lhs, rhs};
      }
  return std::nullopt;
}

Check check_jacobi_antisymmetry(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector lhs = a.bracket_basis(i, j);
      const Vector rhs = scale(Scalar(-1), a.bracket_basis(j, i));
      if (lhs != rhs) return Violation{"antisymmetry", {i, j}, lhs, rhs};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum = a.bracket(unit_vector(n, i), a.bracket_basis(j, k));
        sum = add(sum, a.bracket(unit_vector(n, j), a.bracket_basis(k, i)));
        sum = add(sum, a.bracket(unit_vector(n, k), a.bracket_basis(i, j)));
        if (!is_zero(sum)) return Violation{"Jacobi identity", {i, j, k}, sum, Vector(n)};
      }
  return std::nullopt;
}

void validate_leibniz(const Algebra& a) {
  if (auto v = check_leibniz(a)) throw AxiomError(v->describe());
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("invert: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(aug);
  if (e.rank() != n || (n > 0 && e.pivots[n - 1] != n - 1)) throw InputError("invert: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::string to_string(RepClass c) {
  switch (c) {
    case RepClass::symmetric: return "symmetric";
    case RepClass::antisymmetric: return "antisymmetric";
    case RepClass::general: return "general";
  }
  return "general";
}

Matrix Representation::left_of(const Vector& x) const {
  Matrix out(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) out += x[i] * left[i];
  return out;
}

Matrix Representation::right_of(const Vector& x) const {
  Matrix out(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) out += x[i] * right[i];
  return out;
}

bool Representation::is_symmetric() const {
  for (std::size_t i = 0; i < left.size(); ++i)
    if (!(left[i] + right[i]).is_zero()) return false;
  return true;
}

bool Representation::is_antisymmetric() const {
  for (const auto& r : right)
    if (!r.is_zero()) return false;
  return true;
}

void check_shapes(const Representation& r) {
  const std::size_t n = r.algebra.dim();
  if (r.left.size() != n || r.right.size() != n)
    throw DimensionError("representation: expected " + std::to_string(n) + " left and right matrices, got " +
                         std::to_string(r.left.size()) + " and " + std::to_string(r.right.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (const Matrix* m : {&r.left[i], &r.right[i]})
      if (m->rows() != r.module_dim || m->cols() != r.module_dim)
        throw DimensionError("representation: action of basis element " + std::to_string(i) + " is " +
                             std::to_string(m->rows()) + "x" + std::to_string(m->cols()) + ", module dim is " +
                             std::to_string(r.module_dim));
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Representation adjoint_representation(const Algebra& a) {
  Representation r{a, a.dim(), {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    r.left.push_back(a.left_multiplication(i));
    r.right.push_back(a.right_multiplication(i));
  }
  return r;
}

Representation zero_representation(const Algebra& a, std::size_t module_dim) {
  return Representation{a, module_dim, std::vector<Matrix>(a.dim(), Matrix(module_dim, module_dim)),
                        std::vector<Matrix>(a.dim(), Matrix(module_dim, module_dim))};
}

Representation symmetric_representation(const Algebra& a, std::vector<Matrix> rho) {
  const std::size_t m = rho.empty() ? 0 : rho.front().rows();
  Representation r{a, m, std::move(rho), {}};
  for (const auto& l : r.left) r.right.push_back(Scalar(-1) * l);
  check_shapes(r);
  return r;
}

Representation antisymmetric_representation(const Algebra& a, std::vector<Matrix> rho) {
  const std::size_t m = rho.empty() ? 0 : rho.front().rows();
  Representation r{a, m, std::move(rho), std::vector<Matrix>(a.dim(), Matrix(m, m))};
  check_shapes(r);
  return r;
}

Check check_representation(const Representation& r) {
  check_shapes(r);
  const Algebra& a = r.algebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& xy = a.bracket_basis(i, j);
      Matrix lhs = r.left_of(xy);
      Matrix rhs = commutator(r.left[i], r.left[j]);
      if (lhs != rhs) return matrix_violation("rho^L([x,y]) = [rho^L(x), rho^L(y)]", {i, j}, lhs, rhs);
      lhs = r.right_of(xy);
      rhs = commutator(r.left[i], r.right[j]);
      if (lhs != rhs) return matrix_violation("rho^R([x,y]) = [rho^L(x), rho^R(y)]", {i, j}, lhs, rhs);
      lhs = r.right[j] * r.left[i];
      rhs = Scalar(-1) * (r.right[j] * r.right[i]);
      if (lhs != rhs) return matrix_violation("rho^R(y) rho^L(x) = -rho^R(y) rho^R(x)", {i, j}, lhs, rhs);
    }
  return std::nullopt;
}

void validate_representation(const Representation& r) {
  if (auto v = check_representation(r)) throw AxiomError(v->describe());
}

RepClass classify_representation(const Representation& r) {
  if (r.is_symmetric()) return RepClass::symmetric;
  if (r.is_antisymmetric()) return RepClass::antisymmetric;
  return RepClass::general;
}

Check check_lie_representation(const Algebra& a, const std::vector<Matrix>& rho) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix lhs(rho[i].rows(), rho[i].cols());
      const Vector& xy = a.bracket_basis(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!is_zero(xy[k])) lhs += xy[k] * rho[k];
      Matrix rhs = commutator(rho[i], rho[j]);
      if (lhs != rhs) return matrix_violation("rho([x,y]) = [rho(x), rho(y)]", {i, j}, lhs, rhs);
    }
  return std::nullopt;
}

Algebra semidirect_product(const Representation& r) {
  check_shapes(r);
  const std::size_t n = r.algebra.dim();
  const std::size_t m = r.module_dim;
  const std::size_t d = n + m;
  std::vector<Vector> brackets(d * d, Vector(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& b = r.algebra.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) brackets[i * d + j][k] = b[k];
    }
  // [x, v] = rho^L(x) v and [u, y] = rho^R(y) u
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t k = 0; k < m; ++k) {
        brackets[i * d + (n + v)][n + k] = r.left[i](k, v);
        brackets[(n + v) * d + i][n + k] = r.right[i](k, v);
      }
  std::vector<std::string> names = r.algebra.basis_names();
  for (std::size_t v = 0; v < m; ++v) names.push_back("v" + std::to_string(v + 1));
  return Algebra(std::move(names), std::move(brackets));
}

Representation change_basis(const Representation& r, const Matrix& p_alg, const Matrix& p_mod) {
  const Matrix inv = invert(p_mod);
  Representation out{r.algebra.change_basis(p_alg), r.module_dim, {}, {}};
  for (std::size_t a = 0; a < r.algebra.dim(); ++a) {
    const Vector x = p_alg.column(a);
    out.left.push_back(inv * r.left_of(x) * p_mod);
    out.right.push_back(inv * r.right_of(x) * p_mod);
  }
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra == b.algebra)) throw DimensionError("direct_sum: representations of different algebras");
  const std::size_t m = a.module_dim + b.module_dim;
  Representation out{a.algebra, m, {}, {}};
  auto embed = [&](const Matrix& x, const Matrix& y) {
    Matrix s(m, m);
    for (std::size_t r = 0; r < a.module_dim; ++r)
      for (std::size_t c = 0; c < a.module_dim; ++c) s(r, c) = x(r, c);
    for (std::size_t r = 0; r < b.module_dim; ++r)
      for (std::size_t c = 0; c < b.module_dim; ++c) s(a.module_dim + r, a.module_dim + c) = y(r, c);
    return s;
  };
  for (std::size_t i = 0; i < a.algebra.dim(); ++i) {
    out.left.push_back(embed(a.left[i], b.left[i]));
    out.right.push_back(embed(a.right[i], b.right[i]));
  }
  return out;
}

}  // namespace lrb
