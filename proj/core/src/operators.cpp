#include "lrb/operators.hpp"

#include "lrb/errors.hpp"

namespace lrb {
namespace {

void require_lie_symmetric(const LinearOperator& t, const char* who) {
  if (!t.target().is_lie()) throw InputError(std::string(who) + ": target algebra is not a Lie algebra");
  if (!t.rep.is_symmetric())
    throw InputError(std::string(who) + ": a Lie representation must be stored symmetric (R = -L)");
}

// Images T(e_u) for every basis vector of V.
std::vector<Vector> images(const LinearOperator& t) {
  std::vector<Vector> out;
  for (std::size_t u = 0; u < t.source_dim(); ++u) out.push_back(t.matrix.column(u));
  return out;
}

template <typename Rhs>
Check check_pairs(const LinearOperator& t, const char* axiom, Rhs rhs) {
  check_shapes(t);
  const auto tv = images(t);
  for (std::size_t u = 0; u < t.source_dim(); ++u)
    for (std::size_t v = 0; v < t.source_dim(); ++v) {
      Vector lhs = t.target().bracket(tv[u], tv[v]);
      Vector r = t.matrix * rhs(tv, u, v);
      if (lhs != r) return Violation{axiom, {u, v}, std::move(lhs), std::move(r)};
    }
  return std::nullopt;
}

}  // namespace

void check_shapes(const LinearOperator& t) {
  check_shapes(t.rep);
  if (t.matrix.rows() != t.target().dim() || t.matrix.cols() != t.rep.module_dim)
    throw DimensionError("operator matrix is " + std::to_string(t.matrix.rows()) + "x" +
                         std::to_string(t.matrix.cols()) + ", expected " + std::to_string(t.target().dim()) + "x" +
                         std::to_string(t.rep.module_dim) + " (dim lambda x dim V)");
}

Check is_rbo_leibniz(const LinearOperator& t) {
  return check_pairs(t, "[Tu,Tv] = T(rho^L(Tu)v + rho^R(Tv)u)", [&](const auto& tv, std::size_t u, std::size_t v) {
    return add(t.rep.left_of(tv[u]).column(v), t.rep.right_of(tv[v]).column(u));
  });
}

Check is_rbo_lie(const LinearOperator& t) {
  require_lie_symmetric(t, "is_rbo_lie");
  return check_pairs(t, "[Tu,Tv] = T(rho(Tu)v - rho(Tv)u)", [&](const auto& tv, std::size_t u, std::size_t v) {
    return add(t.rep.left_of(tv[u]).column(v), scale(Scalar(-1), t.rep.left_of(tv[v]).column(u)));
  });
}

Check is_averaging(const LinearOperator& t) {
  require_lie_symmetric(t, "is_averaging");
  return check_pairs(t, "[Tu,Tv] = T(rho(Tu)v)",
                     [&](const auto& tv, std::size_t u, std::size_t v) { return t.rep.left_of(tv[u]).column(v); });
}

Algebra descendent_bracket_unchecked(const LinearOperator& t) {
  check_shapes(t);
  const std::size_t m = t.source_dim();
  const auto tv = images(t);
  std::vector<Matrix> left, right;
  for (std::size_t u = 0; u < m; ++u) {
    left.push_back(t.rep.left_of(tv[u]));
    right.push_back(t.rep.right_of(tv[u]));
  }
  std::vector<Vector> brackets(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) brackets[u * m + v] = add(left[u].column(v), right[v].column(u));
  return Algebra(Algebra::default_names(m), std::move(brackets));
}

Algebra descendent_bracket(const LinearOperator& t) {
  if (auto v = is_rbo_leibniz(t)) throw AxiomError("descendent_bracket: not a relative Rota-Baxter operator; " + v->describe());
  return descendent_bracket_unchecked(t);
}

Representation induced_rep_on_target_unchecked(const LinearOperator& t) {
  check_shapes(t);
  const Algebra& g = t.target();
  const std::size_t n = g.dim();
  const std::size_t m = t.source_dim();
  Representation out{descendent_bracket_unchecked(t), n, {}, {}};
  const auto tv = images(t);
  for (std::size_t u = 0; u < m; ++u) {
    Matrix l(n, n), r(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      const Vector ex = unit_vector(n, x);
      // varrho^L(u)x = [Tu,x] - T rho^R(x)u ; varrho^R(u)x = [x,Tu] - T rho^L(x)u
      l.set_column(x, add(g.bracket(tv[u], ex), scale(Scalar(-1), t.matrix * t.rep.right[x].column(u))));
      r.set_column(x, add(g.bracket(ex, tv[u]), scale(Scalar(-1), t.matrix * t.rep.left[x].column(u))));
    }
    out.left.push_back(std::move(l));
    out.right.push_back(std::move(r));
  }
  return out;
}

Representation induced_rep_on_target(const LinearOperator& t) {
  if (auto v = is_rbo_leibniz(t))
    throw AxiomError("induced_rep_on_target: not a relative Rota-Baxter operator; " + v->describe());
  return induced_rep_on_target_unchecked(t);
}

LinearOperator functor_F(const LinearOperator& lie_rbo) {
  if (auto v = is_rbo_lie(lie_rbo)) throw AxiomError("functor_F: not a Lie relative Rota-Baxter operator; " + v->describe());
  return lie_rbo;
}

LinearOperator functor_calF(const LinearOperator& averaging) {
  if (auto v = is_averaging(averaging)) throw AxiomError("functor_calF: not an averaging operator; " + v->describe());
  LinearOperator out = averaging;
  out.rep = antisymmetric_representation(averaging.target(), averaging.rep.left);
  return out;
}

namespace {

LinearOperator push_forward(const LinearOperator& t, const QuotientData& q) {
  if (!(q.source == t.target())) throw InputError("functor: quotient data belongs to a different algebra");
  Representation theta = induced_theta(q, t.rep);
  return LinearOperator{std::move(theta), q.pr * t.matrix};
}

}  // namespace

LinearOperator functor_G(const LinearOperator& t, const QuotientData& q) {
  if (!t.rep.is_symmetric()) throw InputError("functor_G: representation is not symmetric");
  if (auto v = is_rbo_leibniz(t)) throw AxiomError("functor_G: not a relative Rota-Baxter operator; " + v->describe());
  return push_forward(t, q);
}

LinearOperator functor_calG(const LinearOperator& t, const QuotientData& q) {
  if (!t.rep.is_antisymmetric()) throw InputError("functor_calG: representation is not antisymmetric");
  if (auto v = is_rbo_leibniz(t)) throw AxiomError("functor_calG: not a relative Rota-Baxter operator; " + v->describe());
  return push_forward(t, q);
}

Check check_operator_homomorphism(const OperatorHomomorphism& h, const LinearOperator& t, const LinearOperator& t2) {
  check_shapes(t);
  check_shapes(t2);
  const Algebra& g = t.target();
  const Algebra& g2 = t2.target();
  if (h.phi.rows() != g2.dim() || h.phi.cols() != g.dim() || h.varphi.rows() != t2.source_dim() ||
      h.varphi.cols() != t.source_dim())
    throw DimensionError("operator homomorphism: phi or varphi has the wrong shape");
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = h.phi * g.bracket_basis(i, j);
      Vector rhs = g2.bracket(h.phi.column(i), h.phi.column(j));
      if (lhs != rhs) return Violation{"phi[x,y] = [phi x, phi y]", {i, j}, lhs, rhs};
    }
  for (std::size_t u = 0; u < t.source_dim(); ++u) {
    Vector lhs = t2.matrix * h.varphi.column(u);
    Vector rhs = h.phi * t.matrix.column(u);
    if (lhs != rhs) return Violation{"T' varphi = phi T", {u}, lhs, rhs};
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Vector px = h.phi.column(x);
    for (std::size_t u = 0; u < t.source_dim(); ++u) {
      const Vector vu = h.varphi.column(u);
      Vector lhs = h.varphi * t.rep.left[x].column(u);
      Vector rhs = t2.rep.left_of(px) * vu;
      if (lhs != rhs) return Violation{"varphi rho^L(x)u = rho'^L(phi x) varphi u", {x, u}, lhs, rhs};
      lhs = h.varphi * t.rep.right[x].column(u);
      rhs = t2.rep.right_of(px) * vu;
      if (lhs != rhs) return Violation{"varphi rho^R(x)u = rho'^R(phi x) varphi u", {x, u}, lhs, rhs};
    }
  }
  return std::nullopt;
}

EquivarianceReport check_equivariance(const LinearOperator& t) {
  if (auto v = is_rbo_leibniz(t)) throw AxiomError("check_equivariance: not a relative Rota-Baxter operator; " + v->describe());
  EquivarianceReport report;
  const Algebra& g = t.target();
  const std::size_t n = g.dim();
  const std::size_t m = t.source_dim();
  for (std::size_t x = 0; x < n && !report.left && !report.right; ++x)
    for (std::size_t v = 0; v < m; ++v) {
      const Vector tv = t.matrix.column(v);
      Vector lhs = t.matrix * t.rep.left[x].column(v);
      Vector rhs = g.bracket(unit_vector(n, x), tv);
      if (lhs != rhs) {
        report.left = Violation{"T(rho^L(x)v) = [x,Tv]", {x, v}, lhs, rhs};
        break;
      }
      lhs = t.matrix * t.rep.right[x].column(v);
      rhs = g.bracket(tv, unit_vector(n, x));
      if (lhs != rhs) {
        report.right = Violation{"T(rho^R(x)v) = [Tv,x]", {x, v}, lhs, rhs};
        break;
      }
    }
  if (!report.equivariant()) return report;

  const Algebra vt = descendent_bracket_unchecked(t);
  Check derivations;
  for (std::size_t x = 0; x < n && !derivations; ++x) {
    const Matrix& l = t.rep.left[x];
    const Matrix& r = t.rep.right[x];
    for (std::size_t v = 0; v < m && !derivations; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        const Vector ev = unit_vector(m, v), ew = unit_vector(m, w);
        const Vector& vw = vt.bracket_basis(v, w);
        Vector lhs = l * vw;
        Vector rhs = add(vt.bracket(l.column(v), ew), vt.bracket(ev, l.column(w)));
        if (lhs != rhs) {
          derivations = Violation{"rho^L(x)[v,w]_T = [rho^L(x)v,w]_T + [v,rho^L(x)w]_T", {x, v, w}, lhs, rhs};
          break;
        }
        lhs = r * vw;
        rhs = add(vt.bracket(ev, r.column(w)), scale(Scalar(-1), vt.bracket(ew, r.column(v))));
        if (lhs != rhs) {
          derivations = Violation{"rho^R(x)[v,w]_T = [v,rho^R(x)w]_T - [w,rho^R(x)v]_T", {x, v, w}, lhs, rhs};
          break;
        }
        lhs = add(vt.bracket(l.column(v), ew), vt.bracket(r.column(v), ew));
        if (!is_zero(lhs)) {
          derivations = Violation{"[rho^L(x)v,w]_T + [rho^R(x)v,w]_T = 0", {x, v, w}, lhs, Vector(m)};
          break;
        }
      }
  }
  report.derivations = derivations;
  return report;
}

Check check_operator(const LinearOperator& t, OperatorKind kind) {
  switch (kind) {
    case OperatorKind::rbo_leibniz: return is_rbo_leibniz(t);
    case OperatorKind::rbo_lie: return is_rbo_lie(t);
    case OperatorKind::averaging: return is_averaging(t);
  }
  return is_rbo_leibniz(t);
}

std::vector<Matrix> enumerate_operators(const Representation& rep, const std::vector<Scalar>& entries,
                                        OperatorKind kind) {
  check_shapes(rep);
  const std::size_t rows = rep.algebra.dim();
  const std::size_t cols = rep.module_dim;
  const std::size_t cells = rows * cols;
  if (entries.empty()) throw InputError("enumerate: empty entry set");
  double total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= static_cast<double>(entries.size());
  if (total > 5e7) throw InputError("enumerate: search space too large (" + std::to_string(total) + " candidates)");

  std::vector<Matrix> found;
  std::vector<std::size_t> digit(cells, 0);
  LinearOperator t{rep, Matrix(rows, cols)};
  while (true) {
    for (std::size_t c = 0; c < cells; ++c) t.matrix(c / cols, c % cols) = entries[digit[c]];
    if (!check_operator(t, kind)) found.push_back(t.matrix);
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < entries.size()) break;
      digit[pos] = 0;
      if (pos == 0) return found;
    }
    if (cells == 0) return found;
  }
}

}  // namespace lrb
