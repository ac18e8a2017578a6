#include "lrb/quotients.hpp"

#include "lrb/errors.hpp"

namespace lrb {

Subspace leibniz_kernel(const Algebra& a) {
  std::vector<Vector> squares;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) squares.push_back(add(a.bracket_basis(i, j), a.bracket_basis(j, i)));
  return Subspace::span_of_vectors(squares, a.dim());
}

QuotientData canonical_lie(const Algebra& a) {
  Subspace kernel = leibniz_kernel(a);
  QuotientCoordinates qc = quotient_coordinates(a.dim(), kernel);
  const std::size_t q = qc.complement.cols();
  std::vector<Vector> brackets(q * q);
  std::vector<std::string> names;
  for (std::size_t s = 0; s < q; ++s) {
    // The complement column s is a standard basis vector; name it after it.
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_zero(qc.complement(i, s))) names.push_back(a.basis_names()[i]);
  }
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t t = 0; t < q; ++t)
      brackets[s * q + t] = qc.coordinate_map * a.bracket(qc.complement.column(s), qc.complement.column(t));
  Algebra quotient(std::move(names), std::move(brackets));
  return QuotientData{a, std::move(kernel), std::move(quotient), std::move(qc.coordinate_map),
                      std::move(qc.complement)};
}

Representation induced_theta(const QuotientData& q, const Representation& r) {
  check_shapes(r);
  for (std::size_t b = 0; b < q.kernel.dim(); ++b) {
    const Matrix act = r.left_of(q.kernel.basis_vector(b));
    if (!act.is_zero())
      throw AxiomError("induced_theta: rho^L does not vanish on Leib basis vector " + std::to_string(b));
  }
  std::vector<Matrix> theta;
  for (std::size_t s = 0; s < q.quotient.dim(); ++s) theta.push_back(r.left_of(q.section.column(s)));
  if (theta.empty()) return zero_representation(q.quotient, r.module_dim);
  return symmetric_representation(q.quotient, std::move(theta));
}

bool is_invariant(const Representation& r, const Subspace& sub) {
  for (std::size_t i = 0; i < r.algebra.dim(); ++i)
    for (std::size_t b = 0; b < sub.dim(); ++b) {
      const Vector v = sub.basis_vector(b);
      if (!sub.contains(r.left[i] * v) || !sub.contains(r.right[i] * v)) return false;
    }
  return true;
}

Representation subrepresentation(const Representation& r, const Subspace& sub) {
  check_shapes(r);
  const std::size_t k = sub.dim();
  Representation out{r.algebra, k, {}, {}};
  auto restrict = [&](const Matrix& act, std::size_t i) {
    Matrix m(k, k);
    for (std::size_t b = 0; b < k; ++b) {
      auto coords = sub.coordinates(act * sub.basis_vector(b));
      if (!coords) throw InvariantError("subrepresentation: action of e" + std::to_string(i) + " leaves the subspace");
      m.set_column(b, *coords);
    }
    return m;
  };
  for (std::size_t i = 0; i < r.algebra.dim(); ++i) {
    out.left.push_back(restrict(r.left[i], i));
    out.right.push_back(restrict(r.right[i], i));
  }
  return out;
}

Representation quotient_representation(const Representation& r, const Subspace& sub) {
  if (!is_invariant(r, sub)) throw InvariantError("quotient_representation: subspace is not invariant");
  QuotientCoordinates qc = quotient_coordinates(r.module_dim, sub);
  Representation out{r.algebra, qc.complement.cols(), {}, {}};
  for (std::size_t i = 0; i < r.algebra.dim(); ++i) {
    out.left.push_back(qc.coordinate_map * r.left[i] * qc.complement);
    out.right.push_back(qc.coordinate_map * r.right[i] * qc.complement);
  }
  return out;
}

RepSplit split_representation(const Representation& r) {
  check_shapes(r);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < r.algebra.dim(); ++i) {
    const Matrix s = r.left[i] + r.right[i];
    for (std::size_t c = 0; c < r.module_dim; ++c) gens.push_back(s.column(c));
  }
  Subspace v_anti = Subspace::span_of_vectors(gens, r.module_dim);
  Representation anti = subrepresentation(r, v_anti);
  Representation sym = quotient_representation(r, v_anti);
  if (!anti.is_antisymmetric()) throw InvariantError("split_representation: restriction to V_anti is not antisymmetric");
  if (!sym.is_symmetric()) throw InvariantError("split_representation: quotient V_sym is not symmetric");
  QuotientCoordinates qc = quotient_coordinates(r.module_dim, v_anti);
  Matrix inclusion = v_anti.inclusion();
  return RepSplit{r, std::move(v_anti), std::move(anti), std::move(sym), std::move(inclusion),
                  std::move(qc.coordinate_map)};
}

}  // namespace lrb
