#include "lrb/brackets.hpp"

#include "lrb/errors.hpp"
#include "lrb/shuffles.hpp"

namespace lrb {
namespace {

using Index = std::vector<std::size_t>;

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

void add_scaled(Vector& out, const Scalar& s, const Vector& v) {
  if (is_zero(s)) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out[i] += s * v[i];
}

// (sum_x a_x M[x]) e_j
Vector act(const std::vector<Matrix>& mats, const Vector& a, std::size_t j) {
  Vector out(mats.empty() ? 0 : mats.front().rows());
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (is_zero(a[x])) continue;
    const Matrix& m = mats[x];
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!is_zero(m(r, j))) out[r] += a[x] * m(r, j);
  }
  return out;
}

// I[perm[from..to)]
Index gather(const Index& I, const std::vector<std::size_t>& perm, std::size_t from, std::size_t to) {
  Index out;
  for (std::size_t t = from; t < to; ++t) out.push_back(I[perm[t]]);
  return out;
}

void append_range(Index& out, const Index& I, std::size_t from, std::size_t to) {
  for (std::size_t t = from; t < to; ++t) out.push_back(I[t]);
}

void require_balavoine(const Cochain& c, const char* who) {
  if (c.convention != DegreeConvention::arity_minus_one)
    throw InputError(std::string(who) + ": cochain does not carry the arity-1 degree convention");
  if (c.domain_dim != c.target_dim) throw DimensionError(std::string(who) + ": cochain is not an endomorphism cochain");
  if (c.arity == 0) throw InputError(std::string(who) + ": arity must be at least 1");
}

// coeff * (P o-bar Q)(e_I)
void compose_value(const Cochain& p, const Cochain& q, const Index& I, const Scalar& coeff, Vector& out) {
  const std::size_t qd = q.arity - 1;
  const std::size_t n = I.size();
  for (std::size_t k = 1; k <= p.arity; ++k) {
    for (const Shuffle& s : shuffles({k - 1, qd})) {
      Index qargs = gather(I, s.perm, k - 1, k - 1 + qd);
      qargs.push_back(I[k - 1 + qd]);
      const Vector qv = q.at(qargs);
      if (is_zero(qv)) continue;
      Index pargs = gather(I, s.perm, 0, k - 1);
      pargs.push_back(0);
      append_range(pargs, I, k + qd, n);
      const int sign = parity_sign(static_cast<long long>((k - 1) * qd)) * s.sign;
      add_scaled(out, coeff * sign, evaluate_with_slot(p, pargs, k - 1, qv));
    }
  }
}

Vector balavoine_value(const Cochain& p, const Cochain& q, const Index& I) {
  Vector out(p.target_dim);
  compose_value(p, q, I, Scalar(1), out);
  compose_value(q, p, I, Scalar(-parity_sign(static_cast<long long>(p.degree()) * q.degree())), out);
  return out;
}

Cochain lift_to_semidirect(const Cochain& g, std::size_t n, std::size_t m) {
  const std::size_t d = n + m;
  Cochain out = Cochain::zero(g.arity, d, d, DegreeConvention::arity_minus_one);
  for (std::size_t c = 0; c < g.columns(); ++c) {
    Index idx = multi_index_of(c, g.arity, m);
    for (auto& i : idx) i += n;
    const std::size_t col = multi_index_column(idx, d);
    for (std::size_t w = 0; w < n; ++w) out.tensor(w, col) = g.tensor(w, c);
  }
  return out;
}

void check_v_cochain(const Cochain& g, const Representation& rep, const char* who) {
  if (g.domain_dim != rep.module_dim || g.target_dim != rep.algebra.dim())
    throw DimensionError(std::string(who) + ": cochain shape does not match Hom(V^n, lambda)");
  if (g.arity == 0) throw InputError(std::string(who) + ": arity must be at least 1");
}

}  // namespace

Cochain structure_cochain(const Algebra& a) {
  const std::size_t n = a.dim();
  Cochain mu = Cochain::zero(2, n, n, DegreeConvention::arity_minus_one);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu.tensor.set_column(i * n + j, a.bracket_basis(i, j));
  return mu;
}

Algebra algebra_from_cochain(const Cochain& mu) {
  if (mu.arity != 2 || mu.domain_dim != mu.target_dim) throw DimensionError("algebra_from_cochain: need a binary endomorphism cochain");
  std::vector<Vector> brackets;
  for (std::size_t c = 0; c < mu.columns(); ++c) brackets.push_back(mu.tensor.column(c));
  return Algebra(Algebra::default_names(mu.domain_dim), std::move(brackets));
}

Cochain balavoine_compose(const Cochain& p, const Cochain& q) {
  require_balavoine(p, "balavoine_compose");
  require_balavoine(q, "balavoine_compose");
  if (p.domain_dim != q.domain_dim) throw DimensionError("balavoine_compose: different spaces");
  Cochain out = Cochain::zero(p.arity + q.arity - 1, p.domain_dim, p.domain_dim, DegreeConvention::arity_minus_one);
  for (std::size_t c = 0; c < out.columns(); ++c) {
    Vector v(p.domain_dim);
    compose_value(p, q, multi_index_of(c, out.arity, out.domain_dim), Scalar(1), v);
    out.tensor.set_column(c, v);
  }
  return out;
}

Cochain balavoine_bracket(const Cochain& p, const Cochain& q) {
  require_balavoine(p, "balavoine_bracket");
  require_balavoine(q, "balavoine_bracket");
  if (p.domain_dim != q.domain_dim) throw DimensionError("balavoine_bracket: different spaces");
  Cochain out = Cochain::zero(p.arity + q.arity - 1, p.domain_dim, p.domain_dim, DegreeConvention::arity_minus_one);
  for (std::size_t c = 0; c < out.columns(); ++c)
    out.tensor.set_column(c, balavoine_value(p, q, multi_index_of(c, out.arity, out.domain_dim)));
  return out;
}

Cochain derived_bracket_direct(const Cochain& g1, const Cochain& g2, const Representation& rep) {
  check_v_cochain(g1, rep, "derived_bracket");
  check_v_cochain(g2, rep, "derived_bracket");
  const Algebra& la = rep.algebra;
  const std::size_t m = g1.arity, n = g2.arity, dv = rep.module_dim;
  Cochain out = Cochain::zero(m + n, dv, la.dim());
  const auto L = [&](const Vector& a, std::size_t j) { return act(rep.left, a, j); };
  const auto R = [&](const Vector& a, std::size_t j) { return act(rep.right, a, j); };

  for (std::size_t c = 0; c < out.columns(); ++c) {
    const Index I = multi_index_of(c, m + n, dv);
    Vector val(la.dim());

    // g1(.., rho^L(g2(..)) v_{k+n}, ..)
    for (std::size_t k = 1; k <= m; ++k)
      for (const Shuffle& s : shuffles({k - 1, n})) {
        const Vector a = g2.at(gather(I, s.perm, k - 1, k - 1 + n));
        if (is_zero(a)) continue;
        Index args = gather(I, s.perm, 0, k - 1);
        args.push_back(0);
        append_range(args, I, k + n, m + n);
        const int sign = parity_sign(static_cast<long long>((k - 1) * n + 1)) * s.sign;
        add_scaled(val, Scalar(sign), evaluate_with_slot(g1, args, k - 1, L(a, I[k + n - 1])));
      }

    // g1(.., rho^R(g2(..)) v_sigma(k+n-1), ..), last of the n-block is k+n-1
    for (std::size_t k = 2; k <= m + 1; ++k)
      for (const Shuffle& s : shuffles({k - 2, n, 1})) {
        if (s.perm[k + n - 3] != k + n - 2) continue;
        const Vector a = g2.at(gather(I, s.perm, k - 2, k + n - 2));
        if (is_zero(a)) continue;
        Index args = gather(I, s.perm, 0, k - 2);
        args.push_back(0);
        append_range(args, I, k + n - 1, m + n);
        const int sign = parity_sign(static_cast<long long>(k * n)) * s.sign;
        add_scaled(val, Scalar(sign), evaluate_with_slot(g1, args, k - 2, R(a, I[s.perm[k + n - 2]])));
      }

    // [g2(.., v_{k+n-1}), g1(.., v_{k+n}, ..)]
    for (std::size_t k = 1; k <= m; ++k)
      for (const Shuffle& s : shuffles({k - 1, n - 1})) {
        Index a2 = gather(I, s.perm, k - 1, k + n - 2);
        a2.push_back(I[k + n - 2]);
        const Vector b = g2.at(a2);
        if (is_zero(b)) continue;
        Index a1 = gather(I, s.perm, 0, k - 1);
        append_range(a1, I, k + n - 1, m + n);
        const int sign = parity_sign(static_cast<long long>((k - 1) * n)) * s.sign;
        add_scaled(val, Scalar(sign), la.bracket(b, g1.at(a1)));
      }

    // [g1(..), g2(.., v_{m+n})]
    for (const Shuffle& s : shuffles({m, n - 1})) {
      const Vector a = g1.at(gather(I, s.perm, 0, m));
      if (is_zero(a)) continue;
      Index a2 = gather(I, s.perm, m, m + n - 1);
      a2.push_back(I[m + n - 1]);
      const int sign = parity_sign(static_cast<long long>(m * n + 1)) * s.sign;
      add_scaled(val, Scalar(sign), la.bracket(a, g2.at(a2)));
    }

    // g2(.., rho^L(g1(..)) v_{k+m}, ..)
    for (std::size_t k = 1; k <= n; ++k)
      for (const Shuffle& s : shuffles({k - 1, m})) {
        const Vector a = g1.at(gather(I, s.perm, k - 1, k - 1 + m));
        if (is_zero(a)) continue;
        Index args = gather(I, s.perm, 0, k - 1);
        args.push_back(0);
        append_range(args, I, k + m, m + n);
        const int sign = parity_sign(static_cast<long long>(m * (k + n - 1))) * s.sign;
        add_scaled(val, Scalar(sign), evaluate_with_slot(g2, args, k - 1, L(a, I[k + m - 1])));
      }

    // g2(.., rho^R(g1(..)) v_sigma(k+m), ..), last of the m-block is k+m
    for (std::size_t k = 1; k <= n; ++k)
      for (const Shuffle& s : shuffles({k - 1, m, 1})) {
        if (s.perm[k + m - 2] != k + m - 1) continue;
        const Vector a = g1.at(gather(I, s.perm, k - 1, k - 1 + m));
        if (is_zero(a)) continue;
        Index args = gather(I, s.perm, 0, k - 1);
        args.push_back(0);
        append_range(args, I, k + m, m + n);
        const int sign = parity_sign(static_cast<long long>(m * (k + n - 1) + 1)) * s.sign;
        add_scaled(val, Scalar(sign), evaluate_with_slot(g2, args, k - 1, R(a, I[s.perm[k + m - 1]])));
      }

    out.tensor.set_column(c, val);
  }
  return out;
}

Cochain derived_bracket_balavoine(const Cochain& g1, const Cochain& g2, const Representation& rep) {
  check_v_cochain(g1, rep, "derived_bracket");
  check_v_cochain(g2, rep, "derived_bracket");
  const std::size_t n = rep.algebra.dim(), dv = rep.module_dim;
  const Cochain mu = structure_cochain(semidirect_product(rep));
  const Cochain h1 = lift_to_semidirect(g1, n, dv);
  const Cochain h2 = lift_to_semidirect(g2, n, dv);
  const Cochain inner = balavoine_bracket(mu, h1);
  const int sign = parity_sign(static_cast<long long>(g1.arity) - 1);
  Cochain out = Cochain::zero(g1.arity + g2.arity, dv, n);
  for (std::size_t c = 0; c < out.columns(); ++c) {
    Index I = multi_index_of(c, out.arity, dv);
    for (auto& i : I) i += n;
    const Vector v = balavoine_value(inner, h2, I);
    for (std::size_t w = 0; w < n; ++w) out.tensor(w, c) = sign * v[w];
  }
  return out;
}

Cochain operator_cochain(const LinearOperator& t) {
  check_shapes(t);
  return Cochain::from_tensor(t.matrix, 1, t.source_dim());
}

bool mc_check(const LinearOperator& t) {
  const Cochain c = operator_cochain(t);
  return derived_bracket_direct(c, c, t.rep).is_zero();
}

AlternatingCochain nr_bracket(const AlternatingCochain& p, const AlternatingCochain& q, const Representation& lie_rep) {
  if (!lie_rep.algebra.is_lie()) throw InputError("nr_bracket: target is not a Lie algebra");
  if (!lie_rep.is_symmetric()) throw InputError("nr_bracket: representation must be a Lie representation stored symmetric");
  const std::size_t g = lie_rep.algebra.dim(), dv = lie_rep.module_dim;
  if (p.domain_dim != dv || q.domain_dim != dv || p.target_dim != g || q.target_dim != g)
    throw DimensionError("nr_bracket: cochain shape does not match Hom(wedge V, g)");
  const std::size_t m = p.arity, n = q.arity;
  if (m == 0 || n == 0) throw InputError("nr_bracket: arity must be at least 1");
  const Cochain P = embed_alternating(p), Q = embed_alternating(q);
  const int mn = parity_sign(static_cast<long long>(m * n));
  const auto tuples = increasing_tuples(dv, m + n);
  AlternatingCochain out = AlternatingCochain::zero(m + n, dv, g);
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const Index& J = tuples[r];
    Vector val(g);
    for (const Shuffle& s : shuffles({n, 1, m - 1})) {
      const Vector a = Q.at(gather(J, s.perm, 0, n));
      if (is_zero(a)) continue;
      Index args{0};
      const Index rest = gather(J, s.perm, n + 1, m + n);
      args.insert(args.end(), rest.begin(), rest.end());
      add_scaled(val, Scalar(-s.sign), evaluate_with_slot(P, args, 0, act(lie_rep.left, a, J[s.perm[n]])));
    }
    for (const Shuffle& s : shuffles({m, 1, n - 1})) {
      const Vector a = P.at(gather(J, s.perm, 0, m));
      if (is_zero(a)) continue;
      Index args{0};
      const Index rest = gather(J, s.perm, m + 1, m + n);
      args.insert(args.end(), rest.begin(), rest.end());
      add_scaled(val, Scalar(mn * s.sign), evaluate_with_slot(Q, args, 0, act(lie_rep.left, a, J[s.perm[m]])));
    }
    for (const Shuffle& s : shuffles({m, n})) {
      const Vector a = P.at(gather(J, s.perm, 0, m));
      if (is_zero(a)) continue;
      add_scaled(val, Scalar(-mn * s.sign), lie_rep.algebra.bracket(a, Q.at(gather(J, s.perm, m, m + n))));
    }
    out.coefficients.set_column(r, val);
  }
  return out;
}

Cochain gla_alpha(const Cochain& g, const QuotientData& q) {
  if (g.target_dim != q.kernel.dim()) throw DimensionError("gla_alpha: cochain does not take values in Leib");
  Cochain out = g;
  out.tensor = q.kernel.inclusion() * g.tensor;
  out.target_dim = q.source.dim();
  return out;
}

Cochain gla_beta(const Cochain& f, const QuotientData& q) {
  if (f.target_dim != q.source.dim()) throw DimensionError("gla_beta: cochain does not take values in lambda");
  Cochain out = f;
  out.tensor = q.pr * f.tensor;
  out.target_dim = q.quotient.dim();
  return out;
}

bool is_intertwiner(const Matrix& phi, const Representation& w_rep, const Representation& v_rep) {
  if (!(w_rep.algebra == v_rep.algebra)) return false;
  if (phi.rows() != v_rep.module_dim || phi.cols() != w_rep.module_dim) return false;
  for (std::size_t x = 0; x < w_rep.algebra.dim(); ++x) {
    if (phi * w_rep.left[x] != v_rep.left[x] * phi) return false;
    if (phi * w_rep.right[x] != v_rep.right[x] * phi) return false;
  }
  return true;
}

Cochain cochain_pullback(const Matrix& phi, const Cochain& f, const Representation& w_rep, const Representation& v_rep) {
  if (f.domain_dim != v_rep.module_dim) throw DimensionError("cochain_pullback: cochain is not defined on V");
  if (!is_intertwiner(phi, w_rep, v_rep)) throw InputError("cochain_pullback: phi does not intertwine the representations");
  Matrix power_map = Matrix::identity(1);
  for (std::size_t i = 0; i < f.arity; ++i) power_map = kronecker(power_map, phi);
  Cochain out = f;
  out.tensor = f.tensor * power_map;
  out.domain_dim = w_rep.module_dim;
  return out;
}

}  // namespace lrb
