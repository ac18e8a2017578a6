#include "lrb/cochain.hpp"

#include <algorithm>

#include "lrb/errors.hpp"
#include "lrb/shuffles.hpp"

namespace lrb {

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t multi_index_column(std::span<const std::size_t> index, std::size_t dim) {
  std::size_t c = 0;
  for (std::size_t i : index) c = c * dim + i;
  return c;
}

std::vector<std::size_t> multi_index_of(std::size_t column, std::size_t arity, std::size_t dim) {
  std::vector<std::size_t> idx(arity);
  for (std::size_t p = arity; p-- > 0;) {
    idx[p] = column % dim;
    column /= dim;
  }
  return idx;
}

Cochain Cochain::zero(std::size_t arity, std::size_t domain_dim, std::size_t target_dim, DegreeConvention convention) {
  return Cochain{arity, domain_dim, target_dim, Matrix(target_dim, power(domain_dim, arity)), convention};
}

Cochain Cochain::from_tensor(Matrix tensor, std::size_t arity, std::size_t domain_dim, DegreeConvention convention) {
  if (tensor.cols() != power(domain_dim, arity))
    throw DimensionError("cochain tensor has " + std::to_string(tensor.cols()) + " columns, expected " +
                         std::to_string(power(domain_dim, arity)));
  const std::size_t target = tensor.rows();
  return Cochain{arity, domain_dim, target, std::move(tensor), convention};
}

int Cochain::degree() const {
  return convention == DegreeConvention::arity ? static_cast<int>(arity) : static_cast<int>(arity) - 1;
}

Vector Cochain::at(std::span<const std::size_t> index) const { return tensor.column(multi_index_column(index, domain_dim)); }

namespace {

void accumulate(const Cochain& f, std::span<const Vector> args, std::size_t pos, std::size_t column, const Scalar& coeff,
                Vector& out) {
  if (pos == args.size()) {
    for (std::size_t w = 0; w < f.target_dim; ++w)
      if (!is_zero(f.tensor(w, column))) out[w] += coeff * f.tensor(w, column);
    return;
  }
  const Vector& a = args[pos];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    accumulate(f, args, pos + 1, column * f.domain_dim + i, coeff * a[i], out);
  }
}

}  // namespace

Vector evaluate(const Cochain& f, std::span<const Vector> args) {
  if (args.size() != f.arity) throw DimensionError("evaluate: wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != f.domain_dim) throw DimensionError("evaluate: argument length");
  Vector out(f.target_dim);
  accumulate(f, args, 0, 0, Scalar(1), out);
  return out;
}

Vector evaluate_with_slot(const Cochain& f, std::span<const std::size_t> index, std::size_t slot, const Vector& v) {
  Vector out(f.target_dim);
  std::vector<std::size_t> idx(index.begin(), index.end());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (is_zero(v[j])) continue;
    idx[slot] = j;
    const std::size_t col = multi_index_column(idx, f.domain_dim);
    for (std::size_t w = 0; w < f.target_dim; ++w)
      if (!is_zero(f.tensor(w, col))) out[w] += v[j] * f.tensor(w, col);
  }
  return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.arity != b.arity || a.domain_dim != b.domain_dim || a.target_dim != b.target_dim)
    throw DimensionError("cochain sum: shapes differ");
  Cochain out = a;
  out.tensor += b.tensor;
  return out;
}

Cochain operator*(const Scalar& s, const Cochain& a) {
  Cochain out = a;
  out.tensor *= s;
  return out;
}

Vector vectorize(const Cochain& f) {
  Vector v(f.tensor.rows() * f.tensor.cols());
  for (std::size_t c = 0; c < f.tensor.cols(); ++c)
    for (std::size_t w = 0; w < f.target_dim; ++w) v[c * f.target_dim + w] = f.tensor(w, c);
  return v;
}

Cochain devectorize(const Vector& v, std::size_t arity, std::size_t domain_dim, std::size_t target_dim) {
  Cochain f = Cochain::zero(arity, domain_dim, target_dim);
  if (v.size() != f.tensor.rows() * f.tensor.cols()) throw DimensionError("devectorize: length mismatch");
  for (std::size_t c = 0; c < f.tensor.cols(); ++c)
    for (std::size_t w = 0; w < target_dim; ++w) f.tensor(w, c) = v[c * target_dim + w];
  return f;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t dim, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > dim) return out;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == dim - k + i - 1) --i;
    if (i == 0) return out;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

AlternatingCochain AlternatingCochain::zero(std::size_t arity, std::size_t domain_dim, std::size_t target_dim) {
  return AlternatingCochain{arity, domain_dim, target_dim, Matrix(target_dim, binomial(domain_dim, arity))};
}

std::size_t increasing_tuple_rank(std::span<const std::size_t> t, std::size_t dim) {
  std::size_t rank = 0, prev = 0;
  const std::size_t k = t.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = (i == 0 ? 0 : prev + 1); v < t[i]; ++v) rank += binomial(dim - v - 1, k - i - 1);
    prev = t[i];
  }
  return rank;
}

namespace {

// Sorts a copy of idx; returns 0 on a repeat, else the permutation sign.
int sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

Cochain embed_alternating(const AlternatingCochain& f) {
  Cochain out = Cochain::zero(f.arity, f.domain_dim, f.target_dim);
  for (std::size_t c = 0; c < out.columns(); ++c) {
    auto idx = multi_index_of(c, f.arity, f.domain_dim);
    const int s = sort_sign(idx);
    if (s == 0) continue;
    const std::size_t r = increasing_tuple_rank(idx, f.domain_dim);
    for (std::size_t w = 0; w < f.target_dim; ++w) out.tensor(w, c) = s * f.coefficients(w, r);
  }
  return out;
}

AlternatingCochain restrict_alternating(const Cochain& f) {
  AlternatingCochain out = AlternatingCochain::zero(f.arity, f.domain_dim, f.target_dim);
  const auto tuples = increasing_tuples(f.domain_dim, f.arity);
  for (std::size_t r = 0; r < tuples.size(); ++r) out.coefficients.set_column(r, f.at(tuples[r]));
  return out;
}

bool is_alternating(const Cochain& f) { return embed_alternating(restrict_alternating(f)) == f; }

Matrix alternating_embedding_matrix(std::size_t domain_dim, std::size_t target_dim, std::size_t k) {
  const std::size_t cols = power(domain_dim, k);
  Matrix m(cols * target_dim, binomial(domain_dim, k) * target_dim);
  for (std::size_t c = 0; c < cols; ++c) {
    auto idx = multi_index_of(c, k, domain_dim);
    const int s = sort_sign(idx);
    if (s == 0) continue;
    const std::size_t r = increasing_tuple_rank(idx, domain_dim);
    for (std::size_t w = 0; w < target_dim; ++w) m(c * target_dim + w, r * target_dim + w) = s;
  }
  return m;
}

}  // namespace lrb
