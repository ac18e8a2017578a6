#include "lrb/cohomology.hpp"

#include <future>
#include <string>

#include "lrb/cochain.hpp"
#include "lrb/errors.hpp"

namespace lrb {

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials)
    : dims_(std::move(dims)), differentials_(std::move(differentials)) {
  if (dims_.empty()) {
    if (!differentials_.empty()) throw InvariantError("complex: differentials without degrees");
    return;
  }
  if (differentials_.size() + 1 != dims_.size())
    throw InvariantError("complex: " + std::to_string(dims_.size()) + " degrees need " +
                         std::to_string(dims_.size() - 1) + " differentials, got " +
                         std::to_string(differentials_.size()));
  for (std::size_t n = 0; n < differentials_.size(); ++n) {
    const Matrix& d = differentials_[n];
    if (d.rows() != dims_[n + 1] || d.cols() != dims_[n])
      throw InvariantError("complex: d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) + "x" +
                           std::to_string(d.cols()) + ", expected " + std::to_string(dims_[n + 1]) + "x" +
                           std::to_string(dims_[n]));
  }
  for (std::size_t n = 0; n + 1 < differentials_.size(); ++n)
    if (!(differentials_[n + 1] * differentials_[n]).is_zero())
      throw InvariantError("complex: d_" + std::to_string(n + 1) + " d_" + std::to_string(n) + " != 0");
}

CohomologyReport cohomology_dims(const CochainComplex& complex) {
  const auto& ds = complex.differentials();
  std::vector<std::future<std::size_t>> jobs;
  jobs.reserve(ds.size());
  for (const auto& d : ds) jobs.push_back(std::async(std::launch::async, [&d] { return rank(d); }));
  std::vector<std::size_t> ranks;
  for (auto& j : jobs) ranks.push_back(j.get());

  CohomologyReport report;
  for (std::size_t n = 0; n < ds.size(); ++n) {
    DegreeRow row;
    row.degree = n;
    row.dim_c = complex.dim(n);
    row.rank_d = ranks[n];
    row.dim_z = row.dim_c - row.rank_d;
    row.dim_b = n == 0 ? 0 : ranks[n - 1];
    if (row.dim_b > row.dim_z) throw InvariantError("cohomology: B^" + std::to_string(n) + " larger than Z^" + std::to_string(n));
    row.dim_h = row.dim_z - row.dim_b;
    report.rows.push_back(row);
  }
  return report;
}

namespace {

std::vector<std::size_t> drop(const std::vector<std::size_t>& idx, std::size_t pos) {
  std::vector<std::size_t> out;
  out.reserve(idx.size() - 1);
  for (std::size_t p = 0; p < idx.size(); ++p)
    if (p != pos) out.push_back(idx[p]);
  return out;
}

void add_block(Matrix& d, std::size_t row0, std::size_t col0, const Matrix& block, int sign) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t s = 0; s < block.cols(); ++s)
      if (!is_zero(block(r, s))) {
        if (sign > 0)
          d(row0 + r, col0 + s) += block(r, s);
        else
          d(row0 + r, col0 + s) -= block(r, s);
      }
}

void add_identity(Matrix& d, std::size_t row0, std::size_t col0, std::size_t w, const Scalar& c) {
  for (std::size_t r = 0; r < w; ++r) d(row0 + r, col0 + r) += c;
}

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

Matrix lp_differential(const Representation& rep, std::size_t n) {
  check_shapes(rep);
  const Algebra& a = rep.algebra;
  const std::size_t dim = a.dim();
  const std::size_t w = rep.module_dim;
  Matrix d(power(dim, n + 1) * w, power(dim, n) * w);
  for (std::size_t jc = 0; jc < power(dim, n + 1); ++jc) {
    const auto j = multi_index_of(jc, n + 1, dim);
    const std::size_t row0 = jc * w;
    // (-1)^{i+1} rho^L(x_i) f(.., x_i omitted, ..), i = 1..n
    for (std::size_t i = 1; i <= n; ++i)
      add_block(d, row0, multi_index_column(drop(j, i - 1), dim) * w, rep.left[j[i - 1]], parity_sign(i + 1));
    // (-1)^{n+1} rho^R(x_{n+1}) f(x_1..x_n)
    add_block(d, row0, multi_index_column(drop(j, n), dim) * w, rep.right[j[n]], parity_sign(n + 1));
    // (-1)^i f(.., x_i omitted, .., [x_i, x_j] at slot j, ..)
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (std::size_t jj = i + 1; jj <= n + 1; ++jj) {
        const Vector& br = a.bracket_basis(j[i - 1], j[jj - 1]);
        auto k = drop(j, i - 1);
        for (std::size_t m = 0; m < dim; ++m) {
          if (is_zero(br[m])) continue;
          k[jj - 2] = m;
          const Scalar c = parity_sign(i) * br[m];
          add_identity(d, row0, multi_index_column(k, dim) * w, w, c);
        }
      }
  }
  return d;
}

Matrix rbo_coboundary(const LinearOperator& t, std::size_t n) { return lp_differential(induced_rep_on_target(t), n); }

namespace {

// T-images and the derived blocks used by both display formulas.
struct OperatorBlocks {
  std::vector<Matrix> ad_left;   // y -> [T v_i, y]
  std::vector<Matrix> ad_right;  // y -> [y, T v_i]
  std::vector<Matrix> t_right;   // y -> T rho^R(y) v_i
  std::vector<Matrix> t_left;    // y -> T rho^L(y) v_i
};

OperatorBlocks operator_blocks(const LinearOperator& t) {
  const Algebra& g = t.target();
  const std::size_t dl = g.dim();
  OperatorBlocks b;
  for (std::size_t i = 0; i < t.source_dim(); ++i) {
    Matrix al(dl, dl), ar(dl, dl), tr(dl, dl), tl(dl, dl);
    for (std::size_t x = 0; x < dl; ++x) {
      const Scalar& c = t.matrix(x, i);
      if (is_zero(c)) continue;
      al += c * g.left_multiplication(x);
      ar += c * g.right_multiplication(x);
    }
    for (std::size_t s = 0; s < dl; ++s) {
      tr.set_column(s, t.matrix * t.rep.right[s].column(i));
      tl.set_column(s, t.matrix * t.rep.left[s].column(i));
    }
    b.ad_left.push_back(std::move(al));
    b.ad_right.push_back(std::move(ar));
    b.t_right.push_back(std::move(tr));
    b.t_left.push_back(std::move(tl));
  }
  return b;
}

}  // namespace

Matrix rbo_coboundary_display(const LinearOperator& t, std::size_t n) {
  check_shapes(t);
  if (auto v = is_rbo_leibniz(t)) throw AxiomError("not a relative Rota-Baxter operator: " + v->describe());
  const std::size_t dv = t.source_dim();
  const std::size_t dl = t.target().dim();
  const OperatorBlocks b = operator_blocks(t);
  Matrix d(power(dv, n + 1) * dl, power(dv, n) * dl);
  for (std::size_t jc = 0; jc < power(dv, n + 1); ++jc) {
    const auto j = multi_index_of(jc, n + 1, dv);
    const std::size_t row0 = jc * dl;
    for (std::size_t i = 1; i <= n; ++i) {
      const std::size_t col0 = multi_index_column(drop(j, i - 1), dv) * dl;
      add_block(d, row0, col0, b.ad_left[j[i - 1]], parity_sign(i + 1));
      add_block(d, row0, col0, b.t_right[j[i - 1]], -parity_sign(i + 1));
    }
    const std::size_t last = multi_index_column(drop(j, n), dv) * dl;
    add_block(d, row0, last, b.ad_right[j[n]], parity_sign(n + 1));
    add_block(d, row0, last, b.t_left[j[n]], parity_sign(n));
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (std::size_t jj = i + 1; jj <= n + 1; ++jj) {
        const Vector u = add(t.rep.left_of(t.matrix.column(j[i - 1])).column(j[jj - 1]),
                             t.rep.right_of(t.matrix.column(j[jj - 1])).column(j[i - 1]));
        auto k = drop(j, i - 1);
        for (std::size_t m = 0; m < dv; ++m) {
          if (is_zero(u[m])) continue;
          k[jj - 2] = m;
          add_identity(d, row0, multi_index_column(k, dv) * dl, dl, parity_sign(i) * u[m]);
        }
      }
  }
  return d;
}

Matrix averaging_coboundary(const LinearOperator& t, std::size_t n) { return rbo_coboundary(functor_calF(t), n); }

Matrix averaging_coboundary_display(const LinearOperator& t, std::size_t n) {
  check_shapes(t);
  if (auto v = is_averaging(t)) throw AxiomError("not a relative averaging operator: " + v->describe());
  const std::size_t dv = t.source_dim();
  const std::size_t dl = t.target().dim();
  const OperatorBlocks b = operator_blocks(t);
  Matrix d(power(dv, n + 1) * dl, power(dv, n) * dl);
  for (std::size_t jc = 0; jc < power(dv, n + 1); ++jc) {
    const auto j = multi_index_of(jc, n + 1, dv);
    const std::size_t row0 = jc * dl;
    for (std::size_t i = 1; i <= n; ++i)
      add_block(d, row0, multi_index_column(drop(j, i - 1), dv) * dl, b.ad_left[j[i - 1]], parity_sign(i + 1));
    const std::size_t last = multi_index_column(drop(j, n), dv) * dl;
    add_block(d, row0, last, b.ad_right[j[n]], parity_sign(n + 1));
    add_block(d, row0, last, b.t_left[j[n]], parity_sign(n));
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (std::size_t jj = i + 1; jj <= n + 1; ++jj) {
        const Vector u = t.rep.left_of(t.matrix.column(j[i - 1])).column(j[jj - 1]);
        auto k = drop(j, i - 1);
        for (std::size_t m = 0; m < dv; ++m) {
          if (is_zero(u[m])) continue;
          k[jj - 2] = m;
          add_identity(d, row0, multi_index_column(k, dv) * dl, dl, parity_sign(i) * u[m]);
        }
      }
  }
  return d;
}

Matrix ce_differential(const Representation& lie_rep, std::size_t k) {
  check_shapes(lie_rep);
  const Algebra& g = lie_rep.algebra;
  const std::size_t dim = g.dim();
  const std::size_t w = lie_rep.module_dim;
  Matrix d(binomial(dim, k + 1) * w, binomial(dim, k) * w);
  for (const auto& j : increasing_tuples(dim, k + 1)) {
    const std::size_t row0 = increasing_tuple_rank(j, dim) * w;
    for (std::size_t i = 0; i <= k; ++i)
      add_block(d, row0, increasing_tuple_rank(drop(j, i), dim) * w, lie_rep.left[j[i]], parity_sign(i));
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t l = i + 1; l <= k; ++l) {
        const Vector& br = g.bracket_basis(j[i], j[l]);
        const auto rest = drop(drop(j, l), i);
        for (std::size_t m = 0; m < dim; ++m) {
          if (is_zero(br[m])) continue;
          // f([x_i, x_l], rest): move the bracket slot into sorted position.
          std::size_t pos = 0;
          bool repeated = false;
          for (std::size_t r : rest) {
            if (r == m) repeated = true;
            if (r < m) ++pos;
          }
          if (repeated) continue;
          auto sorted = rest;
          sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), m);
          const Scalar c = parity_sign(i + l + pos) * br[m];
          add_identity(d, row0, increasing_tuple_rank(sorted, dim) * w, w, c);
        }
      }
  }
  return d;
}

namespace {

template <class Dim, class Diff>
CochainComplex build_complex(std::size_t max_degree, Dim dim_of, Diff diff) {
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) dims.push_back(dim_of(n));
  std::vector<std::future<Matrix>> jobs;
  for (std::size_t n = 0; n <= max_degree; ++n) jobs.push_back(std::async(std::launch::async, diff, n));
  std::vector<Matrix> ds;
  for (auto& j : jobs) ds.push_back(j.get());
  return CochainComplex(std::move(dims), std::move(ds));
}

}  // namespace

CochainComplex lp_complex(const Representation& rep, std::size_t max_degree) {
  validate_representation(rep);
  const std::size_t dim = rep.algebra.dim(), w = rep.module_dim;
  return build_complex(
      max_degree, [&](std::size_t n) { return power(dim, n) * w; },
      [&](std::size_t n) { return lp_differential(rep, n); });
}

CochainComplex rbo_complex(const LinearOperator& t, std::size_t max_degree) {
  const Representation induced = induced_rep_on_target(t);
  return lp_complex(induced, max_degree);
}

CochainComplex averaging_complex(const LinearOperator& t, std::size_t max_degree) {
  return rbo_complex(functor_calF(t), max_degree);
}

Representation ce_coefficients(const LinearOperator& lie_rbo) {
  if (auto v = is_rbo_lie(lie_rbo)) throw AxiomError("not a relative Rota-Baxter operator: " + v->describe());
  const Representation induced = induced_rep_on_target(functor_F(lie_rbo));
  return symmetric_representation(induced.algebra, induced.left);
}

CochainComplex ce_complex(const LinearOperator& lie_rbo, std::size_t max_degree) {
  const Representation rep = ce_coefficients(lie_rbo);
  if (!rep.algebra.is_lie()) throw InvariantError("descendent bracket of a Lie operator is not Lie");
  if (auto v = check_lie_representation(rep.algebra, rep.left))
    throw InvariantError("induced action is not a Lie representation: " + v->describe());
  const std::size_t dim = rep.algebra.dim(), w = rep.module_dim;
  return build_complex(
      max_degree, [&](std::size_t n) { return binomial(dim, n) * w; },
      [&](std::size_t n) { return ce_differential(rep, n); });
}

CochainComplex lp_lie_rbo_complex(const LinearOperator& lie_rbo, std::size_t max_degree) {
  return rbo_complex(functor_F(lie_rbo), max_degree);
}

RelativeComplex relative_complex(const LinearOperator& lie_rbo, std::size_t max_degree) {
  const Representation rep = ce_coefficients(lie_rbo);
  const std::size_t dim = rep.algebra.dim(), w = rep.module_dim;
  std::vector<QuotientCoordinates> coker;
  RelativeComplex out;
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) {
    const Matrix iota = alternating_embedding_matrix(dim, w, n);
    coker.push_back(quotient_coordinates(iota.rows(), column_space(iota)));
    dims.push_back(coker.back().coordinate_map.rows());
    out.expected_dims.push_back(w * (power(dim, n) - binomial(dim, n)));
  }
  std::vector<Matrix> ds;
  for (std::size_t n = 0; n <= max_degree; ++n)
    ds.push_back(coker[n + 1].coordinate_map * (lp_differential(rep, n) * coker[n].complement));
  out.complex = CochainComplex(std::move(dims), std::move(ds));
  return out;
}

CohomologyModel::CohomologyModel(const std::optional<Matrix>& d_in, const Matrix& d_out)
    : cocycles_(kernel_basis(d_out)) {
  std::vector<Vector> images;
  if (d_in) {
    if (d_in->rows() != d_out.cols()) throw InvariantError("cohomology model: differential shapes do not compose");
    for (std::size_t c = 0; c < d_in->cols(); ++c) {
      const Vector b = d_in->column(c);
      if (is_zero(b)) continue;
      auto coords = cocycles_.coordinates(b);
      if (!coords) throw InvariantError("cohomology model: a coboundary is not closed");
      images.push_back(std::move(*coords));
    }
  }
  boundaries_in_z_ = Subspace::span_of_vectors(images, cocycles_.dim());
  coordinates_ = quotient_coordinates(cocycles_.dim(), boundaries_in_z_);
}

Vector CohomologyModel::representative(std::size_t a) const {
  return cocycles_.inclusion() * coordinates_.complement.column(a);
}

Vector CohomologyModel::classify(const Vector& z) const {
  auto coords = cocycles_.coordinates(z);
  if (!coords) throw InvariantError("cohomology model: cochain is not a cocycle");
  return coordinates_.coordinate_map * *coords;
}

bool CohomologyModel::is_coboundary(const Vector& z) const { return is_zero(classify(z)); }

}  // namespace lrb
