#include "lrb/exact_sequences.hpp"

#include <algorithm>
#include <random>

#include "lrb/cochain.hpp"
#include "lrb/errors.hpp"

namespace lrb {

std::optional<std::size_t> chain_map_defect(const ComplexMap& f, const CochainComplex& source,
                                            const CochainComplex& target) {
  const std::size_t n_max = std::min({source.differentials().size(), target.differentials().size(),
                                      f.maps.empty() ? 0 : f.maps.size() - 1});
  for (std::size_t n = 0; n < n_max; ++n)
    if (!(target.d(n) * f.maps[n] == f.maps[n + 1] * source.d(n))) return n;
  return std::nullopt;
}

std::string to_string(SesCase c) { return c == SesCase::symmetric ? "symmetric" : "antisymmetric"; }

ShortExactSequence build_ses(const LinearOperator& t, const QuotientData& q, SesCase kind, std::size_t max_degree) {
  check_shapes(t);
  if (!(q.source == t.target())) throw InputError("build_ses: quotient data belongs to a different algebra");
  if (kind == SesCase::symmetric && !t.rep.is_symmetric())
    throw InputError("build_ses: symmetric case needs rho^R = -rho^L");
  if (kind == SesCase::antisymmetric && !t.rep.is_antisymmetric())
    throw InputError("build_ses: antisymmetric case needs rho^R = 0");
  if (auto v = is_rbo_leibniz(t)) throw AxiomError("build_ses: not a relative Rota-Baxter operator; " + v->describe());

  ShortExactSequence ses;
  ses.kind = kind;
  ses.op = t;
  ses.quotient_data = q;
  ses.reduced = kind == SesCase::symmetric ? functor_G(t, q) : functor_calG(t, q);

  const Representation induced = induced_rep_on_target(t);
  ses.mid = lp_complex(induced, max_degree + 1);
  ses.sub = lp_complex(subrepresentation(induced, q.kernel), max_degree + 1);
  ses.quot = lp_complex(quotient_representation(induced, q.kernel), max_degree + 1);
  ses.quot_direct = kind == SesCase::symmetric ? lp_lie_rbo_complex(ses.reduced, max_degree + 1)
                                               : averaging_complex(ses.reduced, max_degree + 1);

  const std::size_t dv = t.source_dim();
  const Matrix incl = q.kernel.inclusion();
  for (std::size_t n = 0; n < ses.mid.size(); ++n) {
    ses.alpha.maps.push_back(block_diagonal(incl, power(dv, n)));
    ses.beta.maps.push_back(block_diagonal(q.pr, power(dv, n)));
  }

  if (auto n = chain_map_defect(ses.alpha, ses.sub, ses.mid))
    throw InvariantError("build_ses: alpha is not a chain map in degree " + std::to_string(*n));
  if (auto n = chain_map_defect(ses.beta, ses.mid, ses.quot))
    throw InvariantError("build_ses: beta is not a chain map in degree " + std::to_string(*n));
  for (std::size_t n = 0; n < ses.mid.size(); ++n) {
    const Matrix& a = ses.alpha.maps[n];
    const Matrix& b = ses.beta.maps[n];
    if (!(b * a).is_zero()) throw InvariantError("build_ses: beta alpha != 0 in degree " + std::to_string(n));
    const std::size_t ra = rank(a), rb = rank(b);
    if (ra != a.cols() || rb != b.rows() || ra + rb != ses.mid.dim(n))
      throw InvariantError("build_ses: column " + std::to_string(n) + " is not exact");
  }
  for (std::size_t n = 0; n < ses.quot.differentials().size(); ++n)
    if (!(ses.quot.d(n) == ses.quot_direct.d(n)))
      throw InvariantError("build_ses: quotient differential differs from the reduced operator's in degree " +
                           std::to_string(n));
  return ses;
}

namespace {

CohomologyModel model_of(const CochainComplex& c, std::size_t n) {
  std::optional<Matrix> d_in;
  if (n > 0) d_in = c.d(n - 1);
  return CohomologyModel(d_in, c.d(n));
}

Vector random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Vector v(dim);
  for (auto& x : v) x = dist(rng);
  return v;
}

// H(f) between cohomology coordinate spaces.
Matrix induced_on_cohomology(const Matrix& f, const CohomologyModel& from, const CohomologyModel& to) {
  Matrix m(to.dim(), from.dim());
  for (std::size_t a = 0; a < from.dim(); ++a) m.set_column(a, to.classify(f * from.representative(a)));
  return m;
}

}  // namespace

Matrix connecting_map(const ShortExactSequence& ses, std::size_t n, std::uint64_t lift_seed) {
  if (n + 1 >= ses.sub.differentials().size())
    throw InputError("connecting_map: degree " + std::to_string(n) + " is beyond the built complexes");
  const CohomologyModel quot_model = model_of(ses.quot, n);
  const CohomologyModel sub_model = model_of(ses.sub, n + 1);
  const std::size_t dv = ses.op.source_dim();
  const Matrix lift_map = block_diagonal(ses.quotient_data.section, power(dv, n));
  const Subspace& leib = ses.quotient_data.kernel;
  const std::size_t dl = ses.op.target().dim();
  const std::size_t k = leib.dim();

  std::mt19937_64 rng(lift_seed);
  Matrix c(sub_model.dim(), quot_model.dim());
  for (std::size_t a = 0; a < quot_model.dim(); ++a) {
    Vector h = quot_model.representative(a);
    if (lift_seed != 0 && n > 0) h = add(h, ses.quot.d(n - 1) * random_vector(rng, ses.quot.dim(n - 1)));
    Vector lift = lift_map * h;
    if (lift_seed != 0) lift = add(lift, ses.alpha.maps[n] * random_vector(rng, ses.sub.dim(n)));
    if (!(ses.beta.maps[n] * lift == h)) throw InvariantError("connecting_map: lift is not a preimage");
    const Vector x = ses.mid.d(n) * lift;
    // Pull x back through alpha blockwise.
    const std::size_t blocks = power(dv, n + 1);
    Vector y(blocks * k);
    for (std::size_t b = 0; b < blocks; ++b) {
      Vector block(x.begin() + static_cast<std::ptrdiff_t>(b * dl), x.begin() + static_cast<std::ptrdiff_t>((b + 1) * dl));
      auto coords = leib.coordinates(block);
      if (!coords)
        throw InvariantError("connecting_map: coboundary of a lift leaves the image of alpha in degree " +
                             std::to_string(n + 1));
      for (std::size_t r = 0; r < k; ++r) y[b * k + r] = (*coords)[r];
    }
    c.set_column(a, sub_model.classify(y));
  }
  return c;
}

bool ExactnessReport::exact() const { return !first_failure().has_value(); }

std::optional<std::string> ExactnessReport::first_failure() const {
  for (const auto& d : degrees) {
    const std::string n = std::to_string(d.degree);
    if (!d.exact_at_sub) return "H^" + n + "(sub): image of c^" + n + "-1 differs from ker H(alpha)";
    if (!d.exact_at_mid) return "H^" + n + "(mid): image of H(alpha) differs from ker H(beta)";
    if (!d.exact_at_quot) return "H^" + n + "(quot): image of H(beta) differs from ker c^" + n;
    if (!d.lift_independent) return "c^" + n + ": depends on the lift";
  }
  return std::nullopt;
}

namespace {

// A -f-> B -g-> C exact at B.
bool exact_at(const Matrix& f, const Matrix& g, std::size_t dim_b) {
  if (f.rows() != dim_b || g.cols() != dim_b) throw InvariantError("exactness: map shapes do not compose");
  if (!(g * f).is_zero()) return false;
  return rank(f) == dim_b - rank(g);
}

}  // namespace

ExactnessReport verify_les(const ShortExactSequence& ses, std::size_t max_degree,
                           const std::vector<std::uint64_t>& lift_seeds) {
  if (max_degree + 2 > ses.sub.differentials().size())
    throw InputError("verify_les: complexes were built for fewer degrees than requested");
  ExactnessReport report;
  report.kind = ses.kind;

  std::vector<CohomologyModel> sub, mid, quot;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) {
    sub.push_back(model_of(ses.sub, n));
    mid.push_back(model_of(ses.mid, n));
    quot.push_back(model_of(ses.quot, n));
  }
  std::vector<Matrix> h_alpha, h_beta, conn;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    h_alpha.push_back(induced_on_cohomology(ses.alpha.maps[n], sub[n], mid[n]));
    h_beta.push_back(induced_on_cohomology(ses.beta.maps[n], mid[n], quot[n]));
    conn.push_back(connecting_map(ses, n, 0));
  }

  for (std::size_t n = 0; n <= max_degree; ++n) {
    LesDegree row;
    row.degree = n;
    row.h_sub = sub[n].dim();
    row.h_mid = mid[n].dim();
    row.h_quot = quot[n].dim();
    row.rank_alpha = rank(h_alpha[n]);
    row.rank_beta = rank(h_beta[n]);
    row.rank_connecting = rank(conn[n]);
    const Matrix incoming = n == 0 ? Matrix(sub[0].dim(), 0) : conn[n - 1];
    row.exact_at_sub = exact_at(incoming, h_alpha[n], row.h_sub);
    row.exact_at_mid = exact_at(h_alpha[n], h_beta[n], row.h_mid);
    row.exact_at_quot = exact_at(h_beta[n], conn[n], row.h_quot);
    row.lift_independent = true;
    for (std::uint64_t seed : lift_seeds)
      if (!(connecting_map(ses, n, seed) == conn[n])) row.lift_independent = false;
    report.degrees.push_back(row);
  }
  return report;
}

}  // namespace lrb
