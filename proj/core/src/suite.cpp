#include "lrb/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "lrb/brackets.hpp"
#include "lrb/cochain.hpp"
#include "lrb/cohomology.hpp"
#include "lrb/errors.hpp"
#include "lrb/exact_sequences.hpp"
#include "lrb/fixtures.hpp"
#include "lrb/quotients.hpp"

namespace lrb::suite {

namespace {

using fixtures::MatrixFamily;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

std::vector<std::size_t> h_dims(const CohomologyReport& r) {
  std::vector<std::size_t> out;
  for (const auto& row : r.rows) out.push_back(row.dim_h);
  return out;
}

Outcome all_zero(const CochainComplex& c) {
  const auto h = h_dims(cohomology_dims(c));
  const bool ok = std::all_of(h.begin(), h.end(), [](std::size_t d) { return d == 0; });
  return {ok, "dim H = " + join(h)};
}

Outcome gl2_ce() { return all_zero(ce_complex(fixtures::matrix_identity_rbo(MatrixFamily::general, 2), 4)); }

Outcome t2_ce() { return all_zero(ce_complex(fixtures::matrix_identity_rbo(MatrixFamily::upper_triangular, 2), 3)); }

Outcome n3_ce() {
  const auto h = n3_ce_dims();
  const bool ok = h.size() == 4 && h[0] >= 1 && h[1] >= 2 && h[2] >= 2 && h[3] >= 1;
  return {ok, "dim H = " + join(h)};
}

Outcome mc_equivalence() {
  const Representation rep = fixtures::symmetric_adjoint(fixtures::leibniz_dim2());
  const int vals[] = {-1, 0, 1};
  std::size_t total = 0, agree = 0, operators = 0;
  std::string first_disagreement;
  for (int a : vals)
    for (int b : vals)
      for (int c : vals)
        for (int d : vals) {
          Matrix m(2, 2);
          m(0, 0) = a;
          m(0, 1) = b;
          m(1, 0) = c;
          m(1, 1) = d;
          const LinearOperator t{rep, m};
          const bool op = !is_rbo_leibniz(t).has_value();
          const bool mc = mc_check(t);
          ++total;
          if (op) ++operators;
          if (op == mc)
            ++agree;
          else if (first_disagreement.empty())
            first_disagreement = " first disagreement at T = [[" + std::to_string(a) + "," + std::to_string(b) +
                                 "],[" + std::to_string(c) + "," + std::to_string(d) + "]]";
        }
  return {total == 81 && agree == total,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(operators) +
              " operators" + first_disagreement};
}

Cochain random_cochain(std::mt19937_64& rng, std::size_t arity, std::size_t domain, std::size_t target) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Cochain f = Cochain::zero(arity, domain, target);
  for (std::size_t r = 0; r < f.tensor.rows(); ++r)
    for (std::size_t c = 0; c < f.tensor.cols(); ++c) f.tensor(r, c) = dist(rng);
  return f;
}

Outcome derived_bracket_oracle() {
  std::vector<Representation> pool;
  for (const auto& r : fixtures::random_representations(40, 7))
    if (r.algebra.dim() <= 3 && r.module_dim <= 3) pool.push_back(r);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> arity(1, 2);
  std::size_t agree = 0;
  const std::size_t pairs = 100;
  for (std::size_t k = 0; k < pairs; ++k) {
    const Representation& rep = pool[k % pool.size()];
    const Cochain g1 = random_cochain(rng, arity(rng), rep.module_dim, rep.algebra.dim());
    const Cochain g2 = random_cochain(rng, arity(rng), rep.module_dim, rep.algebra.dim());
    if (derived_bracket_direct(g1, g2, rep) == derived_bracket_balavoine(g1, g2, rep)) ++agree;
  }
  return {agree == pairs, std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree"};
}

// Matrix of f -> (-1)^{n-1} {T, f}_V on vectorized cochains.
Matrix bracket_with_operator(const LinearOperator& t, std::size_t n) {
  const Cochain tc = operator_cochain(t);
  const std::size_t dv = t.source_dim(), dl = t.target().dim();
  const std::size_t cols = power(dv, n) * dl;
  Matrix m(power(dv, n + 1) * dl, cols);
  const Scalar sign = n % 2 == 1 ? 1 : -1;
  for (std::size_t b = 0; b < cols; ++b) {
    const Cochain f = devectorize(unit_vector(cols, b), n, dv, dl);
    m.set_column(b, scale(sign, vectorize(derived_bracket_direct(tc, f, t.rep))));
  }
  return m;
}

std::vector<std::pair<std::string, LinearOperator>> sign_fixtures() {
  std::vector<std::pair<std::string, LinearOperator>> out = {
      {"gl2", fixtures::matrix_identity_rbo(MatrixFamily::general, 2)},
      {"dim2-zero-sym", fixtures::dim2_zero_symmetric()},
      {"dim2-identity-anti", fixtures::dim2_identity_antisymmetric()},
  };
  const Representation sym = fixtures::symmetric_adjoint(fixtures::leibniz_dim2());
  for (const Matrix& m : enumerate_operators(sym, {Scalar(-1), Scalar(0), Scalar(1)}, OperatorKind::rbo_leibniz))
    if (!m.is_zero()) {
      out.push_back({"dim2-sym-enumerated", LinearOperator{sym, m}});
      break;
    }
  return out;
}

Outcome sign_theorem() {
  std::size_t checked = 0;
  for (const auto& [name, t] : sign_fixtures())
    for (std::size_t n = 1; n <= 3; ++n) {
      if (!(rbo_coboundary(t, n) == bracket_with_operator(t, n)))
        return {false, name + " differs in degree " + std::to_string(n)};
      ++checked;
    }
  return {true, std::to_string(checked) + " (fixture, degree) pairs agree entrywise"};
}

// Largest N <= 3 with dim C^{N+1} <= 1300.
std::size_t degree_limit(std::size_t dim, std::size_t w) {
  std::size_t n = 3;
  while (n > 0 && power(dim, n + 1) * w > 1300) --n;
  return n;
}

Outcome d_squared() {
  std::size_t complexes = 0, differentials = 0;
  auto count = [&](const CochainComplex& c) {
    ++complexes;
    differentials += c.differentials().size();
  };
  for (const auto& [name, rep] : fixtures::builtin_representations())
    count(lp_complex(rep, degree_limit(rep.algebra.dim(), rep.module_dim)));
  for (const auto& rep : fixtures::random_representations(50, 2024))
    count(lp_complex(rep, degree_limit(rep.algebra.dim(), rep.module_dim)));
  for (const auto& f : fixtures::builtin_operators()) {
    const LinearOperator& t = f.op;
    const std::size_t n = degree_limit(t.source_dim(), t.target().dim());
    switch (f.kind) {
      case OperatorKind::rbo_lie:
        count(lp_lie_rbo_complex(t, n));
        count(ce_complex(t, t.source_dim()));
        count(relative_complex(t, std::min<std::size_t>(n, 2)).complex);
        break;
      case OperatorKind::averaging:
        count(averaging_complex(t, n));
        for (std::size_t k = 0; k <= n; ++k)
          if (!(averaging_coboundary(t, k) == averaging_coboundary_display(t, k)))
            return {false, f.name + ": averaging display differs in degree " + std::to_string(k)};
        break;
      case OperatorKind::rbo_leibniz:
        count(rbo_complex(t, n));
        for (std::size_t k = 0; k <= n; ++k)
          if (!(rbo_coboundary(t, k) == rbo_coboundary_display(t, k)))
            return {false, f.name + ": operator display differs in degree " + std::to_string(k)};
        break;
    }
  }
  return {true, std::to_string(complexes) + " complexes, " + std::to_string(differentials) + " differentials"};
}

Outcome les() {
  const Algebra a = fixtures::leibniz_dim2();
  const QuotientData q = canonical_lie(a);
  std::ostringstream detail;
  bool ok = true;
  const std::pair<SesCase, LinearOperator> cases[] = {
      {SesCase::symmetric, fixtures::dim2_zero_symmetric()},
      {SesCase::antisymmetric, fixtures::dim2_identity_antisymmetric()},
  };
  const char* sep = "";
  for (const auto& [kind, t] : cases) {
    const ShortExactSequence ses = build_ses(t, q, kind, 2);
    const ExactnessReport r = verify_les(ses, 2, {1, 2});
    detail << sep << to_string(kind) << ": ";
    sep = "; ";
    if (auto f = r.first_failure()) {
      ok = false;
      detail << *f;
    } else {
      detail << "exact, H(sub/mid/quot) =";
      for (const auto& d : r.degrees) detail << ' ' << d.h_sub << '/' << d.h_mid << '/' << d.h_quot;
    }
  }
  return {ok, detail.str()};
}

bool same_operator(const LinearOperator& a, const LinearOperator& b) { return a.rep == b.rep && a.matrix == b.matrix; }

Outcome counit() {
  std::vector<std::string> failures;
  for (auto family : {MatrixFamily::general, MatrixFamily::upper_triangular}) {
    const LinearOperator t = fixtures::matrix_identity_rbo(family, 2);
    if (!same_operator(functor_G(functor_F(t), canonical_lie(t.target())), t))
      failures.push_back(family == MatrixFamily::general ? "gl2" : "t2");
  }
  const std::pair<std::string, LinearOperator> averaging[] = {
      {"adjoint-identity", fixtures::adjoint_identity_averaging()},
      {"pr", fixtures::pr_averaging(fixtures::leibniz_dim2())},
  };
  for (const auto& [name, t] : averaging)
    if (!same_operator(functor_calG(functor_calF(t), canonical_lie(t.target())), t)) failures.push_back(name);
  if (failures.empty()) return {true, "G F = Id on gl2, t2; calG calF = Id on adjoint-identity, pr"};
  std::string d = "fails on";
  for (const auto& f : failures) d += " " + f;
  return {false, d};
}

Outcome hemisemidirect() {
  const LinearOperator t = fixtures::pr_averaging(fixtures::hemisemidirect_sl2());
  const auto h = h_dims(cohomology_dims(averaging_complex(t, 2)));
  return {h.size() == 3 && h[2] == 0, "dim H = " + join(h)};
}

Outcome ce_lp() {
  std::ostringstream detail;
  bool ok = true;
  const char* sep = "";
  for (const auto& f : fixtures::lie_rbo_fixtures()) {
    const auto ce = cohomology_dims(ce_complex(f.op, 1));
    const auto lp = cohomology_dims(lp_lie_rbo_complex(f.op, 1));
    const bool same = ce.h(0) == lp.h(0) && ce.h(1) == lp.h(1);
    ok = ok && same;
    detail << sep << f.name << ' ' << ce.h(0) << ',' << ce.h(1) << (same ? "=" : "!=") << lp.h(0) << ',' << lp.h(1);
    sep = "; ";
  }
  return {ok, detail.str()};
}

struct Criterion {
  std::string block;
  std::string name;
  double budget;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"gl2", "gl(2) CE cohomology vanishes in degrees 0..4", 10, gl2_ce},
      {"t2", "t(2) CE cohomology vanishes in degrees 0..3", 5, t2_ce},
      {"n3", "n(3) CE cohomology meets the lower bounds", 5, n3_ce},
      {"mc", "Maurer-Cartan elements are the operators (81 candidates)", 5, mc_equivalence},
      {"derived-bracket", "six-term bracket equals the Balavoine-derived bracket", 60, derived_bracket_oracle},
      {"sign", "operator coboundary is the signed bracket with T", 30, sign_theorem},
      {"d-squared", "every differential squares to zero", 60, d_squared},
      {"les", "long exact sequences are exact in degrees 0..2", 60, les},
      {"counit", "counit identities on the operator fixtures", 5, counit},
      {"hemisemidirect", "averaging H^2 of sl(2) hemisemidirect with T = pr vanishes", 300, hemisemidirect},
      {"ce-lp", "CE and LP agree in degrees 0 and 1", 30, ce_lp},
  };
  return list;
}

}  // namespace

std::vector<std::size_t> n3_ce_dims() {
  return h_dims(cohomology_dims(ce_complex(fixtures::matrix_identity_rbo(MatrixFamily::strictly_upper, 3), 3)));
}

int criterion_count() { return static_cast<int>(criteria().size()); }

static const Criterion& criterion_at(int criterion) {
  if (criterion < 1 || criterion > criterion_count())
    throw InputError("unknown criterion " + std::to_string(criterion) + " (1.." + std::to_string(criterion_count()) + ")");
  return criteria()[static_cast<std::size_t>(criterion - 1)];
}

std::string block_of(int criterion) { return criterion_at(criterion).block; }

std::vector<std::string> block_names() {
  std::vector<std::string> names;
  for (const auto& c : criteria()) names.push_back(c.block);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

CheckResult run_criterion(int criterion) {
  const Criterion& c = criterion_at(criterion);
  CheckResult r;
  r.criterion = criterion;
  r.block = c.block;
  r.name = c.name;
  r.budget_seconds = c.budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = c.run();
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& only) {
  const auto known = block_names();
  for (const auto& b : only)
    if (std::find(known.begin(), known.end(), b) == known.end()) throw InputError("unknown block \"" + b + "\"");
  std::vector<std::future<CheckResult>> jobs;
  for (int k = 1; k <= criterion_count(); ++k) {
    const std::string block = block_of(k);
    if (!only.empty() && std::find(only.begin(), only.end(), block) == only.end()) continue;
    jobs.push_back(std::async(std::launch::async, run_criterion, k));
  }
  std::vector<CheckResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
    return a.block != b.block ? a.block < b.block : a.criterion < b.criterion;
  });
  return out;
}

}  // namespace lrb::suite
