#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrb/brackets.hpp"
#include "lrb/cohomology.hpp"
#include "lrb/errors.hpp"
#include "lrb/exact_sequences.hpp"
#include "lrb/io.hpp"
#include "lrb/operators.hpp"
#include "lrb/quotients.hpp"
#include "lrb/suite.hpp"

using namespace lrb;
using io::Report;
using io::Table;

namespace {

enum Exit { ok = 0, verdict_false = 1, input_error = 2, internal_error = 3 };

struct Outcome {
  Report report;
  int exit = ok;
};

std::vector<std::filesystem::path> as_paths(const std::vector<std::string>& files) {
  return {files.begin(), files.end()};
}

const Representation& need_rep(const io::FixtureBundle& b) {
  if (!b.representation) throw InputError("this command needs a representation or operator file");
  return *b.representation;
}

const LinearOperator& need_op(const io::FixtureBundle& b) {
  if (!b.op) throw InputError("this command needs an operator file");
  return *b.op;
}

const Algebra& need_algebra(const io::FixtureBundle& b) {
  if (!b.algebra) throw InputError("this command needs an algebra");
  return *b.algebra;
}

OperatorKind parse_kind(const std::string& s) {
  if (s == "rbo-leibniz") return OperatorKind::rbo_leibniz;
  if (s == "rbo-lie") return OperatorKind::rbo_lie;
  if (s == "averaging") return OperatorKind::averaging;
  throw InputError("unknown operator kind \"" + s + "\"");
}

Table bracket_table(const Algebra& a, const std::string& name) {
  Table t{name, {"x", "y", "[x,y]"}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& v = a.bracket_basis(i, j);
      if (is_zero(v)) continue;
      std::string value;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        if (!value.empty()) value += " + ";
        value += to_string(v[k]) + " " + a.basis_names()[k];
      }
      t.rows.push_back({a.basis_names()[i], a.basis_names()[j], value});
    }
  return t;
}

Table cochain_table(const Cochain& c, const std::string& name) {
  Table t{name, {"index", "value"}, {}};
  for (std::size_t col = 0; col < c.columns(); ++col) {
    const Vector v = c.tensor.column(col);
    if (is_zero(v)) continue;
    std::string idx, value;
    for (std::size_t i : multi_index_of(col, c.arity, c.domain_dim)) idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
    for (const auto& x : v) value += (value.empty() ? "" : " ") + to_string(x);
    t.rows.push_back({"(" + idx + ")", value});
  }
  return t;
}

std::vector<std::string> index_names(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

void add_violation(Report& r, const Check& c) {
  if (c) r.summary.emplace_back("witness", c->describe());
}

Outcome cmd_validate(const io::FixtureBundle& b) {
  Outcome o;
  o.report.command = "validate";
  if (b.algebra) {
    o.report.summary.emplace_back("algebra dim", std::to_string(b.algebra->dim()));
    o.report.summary.emplace_back("lie", b.algebra->is_lie() ? "yes" : "no");
  }
  if (b.representation) {
    o.report.summary.emplace_back("module dim", std::to_string(b.representation->module_dim));
    o.report.summary.emplace_back("class", to_string(classify_representation(*b.representation)));
  }
  if (b.op)
    o.report.summary.emplace_back("operator", std::to_string(b.op->matrix.rows()) + "x" +
                                                  std::to_string(b.op->matrix.cols()));
  o.report.summary.emplace_back("cochains", std::to_string(b.cochains.size()));
  o.report.verdict = "true";
  return o;
}

Outcome cmd_quotient(const io::FixtureBundle& b) {
  Outcome o;
  o.report.command = "quotient";
  const Algebra& a = need_algebra(b);
  const QuotientData q = canonical_lie(a);
  o.report.summary.emplace_back("dim Leib", std::to_string(q.kernel.dim()));
  o.report.summary.emplace_back("dim quotient", std::to_string(q.quotient.dim()));
  o.report.tables.push_back(io::matrix_table("Leib basis (rows)", q.kernel.basis(), index_names(q.kernel.dim(), "k"),
                                             a.basis_names()));
  o.report.tables.push_back(bracket_table(q.quotient, "quotient brackets"));
  o.report.tables.push_back(io::matrix_table("pr", q.pr, q.quotient.basis_names(), a.basis_names()));
  if (b.representation) {
    const RepSplit s = split_representation(*b.representation);
    o.report.summary.emplace_back("dim V_anti", std::to_string(s.v_anti.dim()));
    o.report.summary.emplace_back("dim V_sym", std::to_string(s.sym_rep.module_dim));
  }
  return o;
}

Outcome cmd_check_operator(const io::FixtureBundle& b, const std::string& kind) {
  Outcome o;
  o.report.command = "check-operator --kind " + kind;
  const Check c = check_operator(need_op(b), parse_kind(kind));
  add_violation(o.report, c);
  o.report.verdict = c ? "false" : "true";
  o.exit = c ? verdict_false : ok;
  return o;
}

Outcome cmd_descend(const io::FixtureBundle& b) {
  Outcome o;
  o.report.command = "descend";
  const LinearOperator& t = need_op(b);
  const Algebra d = descendent_bracket(t);
  o.report.tables.push_back(bracket_table(d, "descendent bracket [u,v]_T"));
  const QuotientData q = canonical_lie(t.target());
  const RepClass cls = classify_representation(t.rep);
  o.report.summary.emplace_back("class", to_string(cls));
  o.report.summary.emplace_back("descendent is lie", d.is_lie() ? "yes" : "no");
  if (cls == RepClass::general) throw InputError("descend: the representation is neither symmetric nor antisymmetric");
  const bool sym = cls == RepClass::symmetric;
  const LinearOperator reduced = sym ? functor_G(t, q) : functor_calG(t, q);
  const Check c = sym ? is_rbo_lie(reduced) : is_averaging(reduced);
  if (c) throw InvariantError("descend: reduced operator fails its identity; " + c->describe());
  o.report.summary.emplace_back("reduced kind", sym ? "rbo-lie" : "averaging");
  o.report.tables.push_back(io::matrix_table("reduced operator pr T", reduced.matrix, q.quotient.basis_names(),
                                             index_names(t.source_dim(), "v")));
  return o;
}

Outcome cmd_enumerate(const io::FixtureBundle& b, const std::string& entries, const std::string& kind) {
  Outcome o;
  o.report.command = "enumerate --kind " + kind + " --entries " + entries;
  std::vector<Scalar> values;
  std::stringstream ss(entries);
  for (std::string item; std::getline(ss, item, ',');) values.push_back(parse_rational(item));
  if (values.empty()) throw InputError("enumerate: empty entry set");
  const auto found = enumerate_operators(need_rep(b), values, parse_kind(kind));
  o.report.summary.emplace_back("operators", std::to_string(found.size()));
  Table t{"operators (row-major entries)", {"#", "entries"}, {}};
  for (std::size_t k = 0; k < found.size(); ++k) {
    std::string e;
    for (std::size_t r = 0; r < found[k].rows(); ++r)
      for (std::size_t c = 0; c < found[k].cols(); ++c) e += (e.empty() ? "" : " ") + to_string(found[k](r, c));
    t.rows.push_back({std::to_string(k + 1), e});
  }
  o.report.tables.push_back(std::move(t));
  return o;
}

Outcome cmd_bracket(const io::FixtureBundle& b, const std::string& kind) {
  Outcome o;
  o.report.command = "bracket --kind " + kind;
  if (b.cochains.size() != 2) throw InputError("bracket: expects exactly two cochain files");
  const Cochain& g1 = b.cochains[0];
  const Cochain& g2 = b.cochains[1];
  Cochain result;
  if (kind == "derived") {
    const Representation& rep = need_rep(b);
    result = derived_bracket_direct(g1, g2, rep);
    if (!(result == derived_bracket_balavoine(g1, g2, rep)))
      throw InvariantError("bracket: six-term and Balavoine routes disagree");
    o.report.summary.emplace_back("routes agree", "yes");
  } else if (kind == "balavoine") {
    Cochain p = g1, q = g2;
    p.convention = q.convention = DegreeConvention::arity_minus_one;
    result = balavoine_bracket(p, q);
  } else if (kind == "nr") {
    if (!is_alternating(g1) || !is_alternating(g2)) throw InputError("bracket: nr needs alternating cochains");
    result = embed_alternating(nr_bracket(restrict_alternating(g1), restrict_alternating(g2), need_rep(b)));
  } else {
    throw InputError("unknown bracket kind \"" + kind + "\"");
  }
  o.report.summary.emplace_back("arity", std::to_string(result.arity));
  o.report.tables.push_back(cochain_table(result, "bracket"));
  return o;
}

Outcome cmd_mc(const io::FixtureBundle& b) {
  Outcome o;
  o.report.command = "mc";
  const LinearOperator& t = need_op(b);
  const Cochain tc = operator_cochain(t);
  const Cochain tt = derived_bracket_direct(tc, tc, t.rep);
  const Check op = is_rbo_leibniz(t);
  if (tt.is_zero() == op.has_value()) throw InvariantError("mc: {T,T} = 0 disagrees with the operator identity");
  o.report.tables.push_back(cochain_table(tt, "{T,T}"));
  add_violation(o.report, op);
  o.report.verdict = tt.is_zero() ? "true" : "false";
  o.exit = tt.is_zero() ? ok : verdict_false;
  return o;
}

Outcome cmd_cohomology(const io::FixtureBundle& b, const std::string& kind, int max_degree) {
  Outcome o;
  CochainComplex c;
  std::size_t n = 3;
  if (kind == "lp") {
    if (max_degree >= 0) n = static_cast<std::size_t>(max_degree);
    c = lp_complex(need_rep(b), n);
  } else {
    const LinearOperator& t = need_op(b);
    if (kind == "ce") n = t.source_dim();
    if (max_degree >= 0) n = static_cast<std::size_t>(max_degree);
    if (kind == "rbo")
      c = rbo_complex(t, n);
    else if (kind == "ce")
      c = ce_complex(t, n);
    else if (kind == "averaging")
      c = averaging_complex(t, n);
    else if (kind == "lp-lie-rbo")
      c = lp_lie_rbo_complex(t, n);
    else
      throw InputError("unknown cohomology kind \"" + kind + "\"");
  }
  o.report.command = "cohomology --kind " + kind + " --max-degree " + std::to_string(n);
  o.report.tables.push_back(io::cohomology_table(cohomology_dims(c)));
  return o;
}

Outcome cmd_les(const io::FixtureBundle& b, const std::string& which, int max_degree) {
  Outcome o;
  const LinearOperator& t = need_op(b);
  SesCase kind;
  if (which == "symmetric")
    kind = SesCase::symmetric;
  else if (which == "antisymmetric")
    kind = SesCase::antisymmetric;
  else
    throw InputError("unknown case \"" + which + "\"");
  const std::size_t n =
      max_degree >= 0 ? static_cast<std::size_t>(max_degree) : (t.source_dim() <= 2 ? std::size_t{3} : std::size_t{2});
  o.report.command = "les --case " + which + " --max-degree " + std::to_string(n);
  const ShortExactSequence ses = build_ses(t, canonical_lie(t.target()), kind, n);
  const ExactnessReport r = verify_les(ses, n);
  o.report.tables.push_back(io::les_table(r));
  if (auto f = r.first_failure()) o.report.summary.emplace_back("first failure", *f);
  o.report.verdict = r.exact() ? "true" : "false";
  o.exit = r.exact() ? ok : verdict_false;
  return o;
}

Outcome cmd_examples(const std::vector<std::string>& only, bool timing) {
  Outcome o;
  o.report.command = "paper-examples";
  const auto results = suite::run_suite(only);
  Table t{"checks", {"criterion", "block", "check", "result", "detail"}, {}};
  if (timing) t.columns.push_back("seconds");
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::vector<std::string> row{std::to_string(r.criterion), r.block, r.name, r.pass ? "pass" : "fail", r.detail};
    if (timing) {
      std::ostringstream s;
      s.precision(3);
      s << std::fixed << r.seconds;
      row.push_back(s.str());
    }
    t.rows.push_back(std::move(row));
  }
  o.report.tables.push_back(std::move(t));
  o.report.verdict = all ? "true" : "false";
  o.exit = all ? ok : verdict_false;
  return o;
}

void emit(const Report& r, const std::string& json_path) {
  std::cout << io::render_text(r);
  if (json_path.empty()) return;
  std::ofstream out(json_path);
  if (!out) throw InputError(json_path + ": cannot write report");
  out << io::to_json(r).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Leibniz algebras, their operators and cohomology"};
  app.require_subcommand(1);
  std::string json_path;
  bool timing = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--emit-json", json_path, "Also write the report as JSON");
    sub->add_flag("--timing", timing, "Include wall time in the report");
    return sub;
  };

  std::vector<std::string> files;
  std::string kind, entries = "-1,0,1", which;
  int max_degree = -1;
  std::vector<std::string> only;
  std::function<Outcome(const io::FixtureBundle&)> action;
  bool needs_files = true;

  auto with_files = [&](CLI::App* sub) {
    sub->add_option("files", files, "Fixture JSON files")->required()->check(CLI::ExistingFile);
    return common(sub);
  };

  with_files(app.add_subcommand("validate", "Parse and validate fixture files"))->callback([&] {
    action = cmd_validate;
  });
  with_files(app.add_subcommand("quotient", "Leibniz kernel and canonical Lie quotient"))->callback([&] {
    action = cmd_quotient;
  });
  auto* check = with_files(app.add_subcommand("check-operator", "Check an operator identity"));
  check->add_option("--kind", kind, "rbo-leibniz | rbo-lie | averaging")->required();
  check->callback([&] { action = [&](const io::FixtureBundle& b) { return cmd_check_operator(b, kind); }; });
  with_files(app.add_subcommand("descend", "Descendent bracket and the operator on the Lie quotient"))->callback([&] {
    action = cmd_descend;
  });
  auto* en = with_files(app.add_subcommand("enumerate", "Enumerate operators with entries from a finite set"));
  en->add_option("--entries", entries, "Comma-separated rationals")->capture_default_str();
  en->add_option("--kind", kind, "rbo-leibniz | rbo-lie | averaging")->required();
  en->callback([&] { action = [&](const io::FixtureBundle& b) { return cmd_enumerate(b, entries, kind); }; });
  auto* br = with_files(app.add_subcommand("bracket", "Graded brackets of two cochains"));
  br->add_option("--kind", kind, "derived | balavoine | nr")->required();
  br->callback([&] { action = [&](const io::FixtureBundle& b) { return cmd_bracket(b, kind); }; });
  with_files(app.add_subcommand("mc", "Maurer-Cartan check {T,T} = 0"))->callback([&] { action = cmd_mc; });
  auto* co = with_files(app.add_subcommand("cohomology", "Cohomology dimensions by exact rank"));
  co->add_option("--kind", kind, "lp | rbo | ce | averaging | lp-lie-rbo")->required();
  co->add_option("--max-degree", max_degree, "Highest reported degree");
  co->callback([&] { action = [&](const io::FixtureBundle& b) { return cmd_cohomology(b, kind, max_degree); }; });
  auto* le = with_files(app.add_subcommand("les", "Long exact sequence in cohomology"));
  le->add_option("--case", which, "symmetric | antisymmetric")->required();
  le->add_option("--max-degree", max_degree, "Highest degree checked");
  le->callback([&] { action = [&](const io::FixtureBundle& b) { return cmd_les(b, which, max_degree); }; });
  auto* ex = common(app.add_subcommand("paper-examples", "Run the built-in reference checks"));
  ex->add_option("--only", only, "Blocks to run")->delimiter(',');
  ex->callback([&] {
    needs_files = false;
    action = [&](const io::FixtureBundle&) { return cmd_examples(only, timing); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    io::FixtureBundle bundle;
    if (needs_files) bundle = io::parse_fixture(as_paths(files));
    Outcome o = action(bundle);
    o.report.inputs_digest = bundle.digest;
    if (timing) o.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(o.report, json_path);
    return o.exit;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return input_error;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return internal_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}
