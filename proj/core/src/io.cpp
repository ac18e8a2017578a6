#include "lrb/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lrb/errors.hpp"

namespace lrb::io {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& member(const json& j, const char* key, const std::string& context) {
  if (!j.is_object()) throw ParseError(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(context, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_of(const std::vector<std::string>& names, const json& j, const std::string& context) {
  if (!j.is_string()) throw ParseError(context, "expected a basis name");
  auto it = std::find(names.begin(), names.end(), j.get<std::string>());
  if (it == names.end()) throw ParseError(context, "unknown basis element \"" + j.get<std::string>() + "\"");
  return static_cast<std::size_t>(it - names.begin());
}

Vector vector_by_names(const json& j, const std::vector<std::string>& names, const std::string& context) {
  Vector v(names.size());
  if (j.is_array()) {
    if (j.size() != names.size())
      throw DimensionError(context + ": vector has " + std::to_string(j.size()) + " entries, expected " +
                           std::to_string(names.size()));
    for (std::size_t k = 0; k < j.size(); ++k) v[k] = scalar_from_json(j[k], context + "[" + std::to_string(k) + "]");
    return v;
  }
  if (!j.is_object()) throw ParseError(context, "expected an object or an array of coordinates");
  for (const auto& [key, value] : j.items()) {
    const std::size_t k = index_of(names, json(key), context);
    v[k] = scalar_from_json(value, context + "." + key);
  }
  return v;
}

template <class Parse>
auto nested(const json& j, const fs::path& base_dir, const std::string& context, Parse parse) {
  if (j.is_string()) {
    const fs::path p = base_dir / j.get<std::string>();
    return parse(load_json_file(p), p.parent_path(), p.string());
  }
  return parse(j, base_dir, context);
}

std::string expect_kind(const json& j, const std::string& context) {
  return member(j, "kind", context).get<std::string>();
}

}  // namespace

json load_json_file(const fs::path& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), e.what());
  }
}

Scalar scalar_from_json(const json& j, const std::string& context) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(context, e.what());
    }
  }
  throw ParseError(context, "expected an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const Scalar& s) { return to_string(s); }

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& context) {
  if (!j.is_array()) throw ParseError(context, "expected an array of rows");
  if (j.size() != rows)
    throw DimensionError(context + ": matrix has " + std::to_string(j.size()) + " rows, expected " +
                         std::to_string(rows));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rc = context + "[" + std::to_string(r) + "]";
    if (!row.is_array()) throw ParseError(rc, "expected an array");
    if (row.size() != cols)
      throw DimensionError(rc + ": row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[c], rc + "[" + std::to_string(c) + "]");
  }
  return m;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Algebra algebra_from_json(const json& j, const std::string& context) {
  if (expect_kind(j, context) != "algebra") throw ParseError(context, "kind must be \"algebra\"");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array()) throw ParseError(context + ".basis", "expected an array of names");
    for (const auto& n : b) {
      if (!n.is_string()) throw ParseError(context + ".basis", "names must be strings");
      if (std::find(names.begin(), names.end(), n.get<std::string>()) != names.end())
        throw ParseError(context + ".basis", "duplicate name \"" + n.get<std::string>() + "\"");
      names.push_back(n.get<std::string>());
    }
  } else {
    const json& d = member(j, "dim", context);
    if (!d.is_number_unsigned()) throw ParseError(context + ".dim", "expected a non-negative integer");
    names = Algebra::default_names(d.get<std::size_t>());
  }
  const std::size_t n = names.size();
  std::vector<Vector> brackets(n * n, Vector(n));
  if (j.contains("brackets")) {
    const json& list = j["brackets"];
    if (!list.is_array()) throw ParseError(context + ".brackets", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string bc = context + ".brackets[" + std::to_string(k) + "]";
      const std::size_t x = index_of(names, member(list[k], "x", bc), bc + ".x");
      const std::size_t y = index_of(names, member(list[k], "y", bc), bc + ".y");
      brackets[x * n + y] = vector_by_names(member(list[k], "value", bc), names, bc + ".value");
    }
  }
  return Algebra(std::move(names), std::move(brackets));
}

json to_json(const Algebra& a) {
  json j;
  j["kind"] = "algebra";
  j["basis"] = a.basis_names();
  json list = json::array();
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      const Vector& v = a.bracket_basis(x, y);
      if (is_zero(v)) continue;
      json value = json::object();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) value[a.basis_names()[k]] = to_string(v[k]);
      list.push_back({{"x", a.basis_names()[x]}, {"y", a.basis_names()[y]}, {"value", value}});
    }
  j["brackets"] = list;
  return j;
}

Representation representation_from_json(const json& j, const fs::path& base_dir, const std::string& context) {
  if (expect_kind(j, context) != "representation") throw ParseError(context, "kind must be \"representation\"");
  Algebra a = nested(member(j, "algebra", context), base_dir, context + ".algebra",
                     [](const json& x, const fs::path&, const std::string& c) { return algebra_from_json(x, c); });
  const json& md = member(j, "module_dim", context);
  if (!md.is_number_unsigned()) throw ParseError(context + ".module_dim", "expected a non-negative integer");
  const std::size_t w = md.get<std::size_t>();
  const std::string storage = j.value("storage", std::string("general"));
  if (storage != "general" && storage != "symmetric" && storage != "antisymmetric")
    throw ParseError(context + ".storage", "expected general, symmetric or antisymmetric");

  auto read_actions = [&](const char* key) {
    std::vector<Matrix> out(a.dim(), Matrix(w, w));
    if (!j.contains(key)) return out;
    const json& obj = j[key];
    const std::string kc = context + "." + key;
    if (!obj.is_object()) throw ParseError(kc, "expected an object keyed by basis names");
    for (const auto& [name, m] : obj.items()) {
      const std::size_t i = index_of(a.basis_names(), json(name), kc);
      out[i] = matrix_from_json(m, w, w, kc + "." + name);
    }
    return out;
  };
  std::vector<Matrix> left = read_actions("left");
  if (storage == "symmetric") {
    if (j.contains("right")) throw ParseError(context + ".right", "symmetric storage derives right from left");
    return symmetric_representation(a, std::move(left));
  }
  if (storage == "antisymmetric") {
    if (j.contains("right")) throw ParseError(context + ".right", "antisymmetric storage has right = 0");
    return antisymmetric_representation(a, std::move(left));
  }
  std::vector<Matrix> right = read_actions("right");
  return Representation{std::move(a), w, std::move(left), std::move(right)};
}

json to_json(const Representation& r) {
  json j;
  j["kind"] = "representation";
  j["algebra"] = to_json(r.algebra);
  j["module_dim"] = r.module_dim;
  const bool sym = r.is_symmetric();
  const bool anti = !sym && r.is_antisymmetric();
  j["storage"] = sym ? "symmetric" : anti ? "antisymmetric" : "general";
  json left = json::object(), right = json::object();
  for (std::size_t i = 0; i < r.algebra.dim(); ++i) {
    if (!r.left[i].is_zero()) left[r.algebra.basis_names()[i]] = to_json(r.left[i]);
    if (!r.right[i].is_zero()) right[r.algebra.basis_names()[i]] = to_json(r.right[i]);
  }
  j["left"] = left;
  if (!sym && !anti) j["right"] = right;
  return j;
}

LinearOperator operator_from_json(const json& j, const fs::path& base_dir, const std::string& context) {
  if (expect_kind(j, context) != "operator") throw ParseError(context, "kind must be \"operator\"");
  Representation rep = nested(member(j, "representation", context), base_dir, context + ".representation",
                              [](const json& x, const fs::path& dir, const std::string& c) {
                                return representation_from_json(x, dir, c);
                              });
  Matrix m = matrix_from_json(member(j, "matrix", context), rep.algebra.dim(), rep.module_dim, context + ".matrix");
  return LinearOperator{std::move(rep), std::move(m)};
}

json to_json(const LinearOperator& t) {
  json j;
  j["kind"] = "operator";
  j["representation"] = to_json(t.rep);
  j["matrix"] = to_json(t.matrix);
  return j;
}

Cochain cochain_from_json(const json& j, const std::string& context) {
  if (expect_kind(j, context) != "cochain") throw ParseError(context, "kind must be \"cochain\"");
  auto count = [&](const char* key) {
    const json& v = member(j, key, context);
    if (!v.is_number_unsigned()) throw ParseError(context + "." + key, "expected a non-negative integer");
    return v.get<std::size_t>();
  };
  const std::size_t arity = count("arity"), domain = count("domain_dim"), target = count("target_dim");
  Matrix tensor = matrix_from_json(member(j, "tensor", context), target, power(domain, arity), context + ".tensor");
  return Cochain::from_tensor(std::move(tensor), arity, domain);
}

json to_json(const Cochain& c) {
  json j;
  j["kind"] = "cochain";
  j["arity"] = c.arity;
  j["domain_dim"] = c.domain_dim;
  j["target_dim"] = c.target_dim;
  j["tensor"] = to_json(c.tensor);
  return j;
}

namespace {

void require_same_algebra(const Algebra& a, const Algebra& b, const std::string& what) {
  if (a.dim() != b.dim())
    throw DimensionError(what + ": algebra dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) +
                         " differ");
  if (!(a == b)) throw InputError(what + ": the two files describe different brackets");
}

}  // namespace

FixtureBundle parse_fixture(const std::vector<fs::path>& paths) {
  FixtureBundle bundle;
  std::string digest_input;
  for (const auto& path : paths) {
    const std::string text = read_file(path);
    digest_input += path.filename().string();
    digest_input += '\0';
    digest_input += text;
    digest_input += '\0';
    const json j = load_json_file(path);
    const std::string ctx = path.string();
    const std::string kind = expect_kind(j, ctx);
    const fs::path dir = path.parent_path();
    bundle.files.push_back(path);
    if (kind == "algebra") {
      Algebra a = algebra_from_json(j, ctx);
      if (bundle.algebra) require_same_algebra(*bundle.algebra, a, ctx);
      bundle.algebra = std::move(a);
    } else if (kind == "representation") {
      Representation r = representation_from_json(j, dir, ctx);
      if (bundle.algebra) require_same_algebra(*bundle.algebra, r.algebra, ctx);
      bundle.algebra = r.algebra;
      bundle.representation = std::move(r);
    } else if (kind == "operator") {
      LinearOperator t;
      if (j.contains("representation")) {
        t = operator_from_json(j, dir, ctx);
        if (bundle.representation && !(*bundle.representation == t.rep))
          throw InputError(ctx + ": operator representation differs from the representation file");
      } else {
        if (!bundle.representation)
          throw InputError(ctx + ": operator has no \"representation\" and none was given before it");
        const Representation& r = *bundle.representation;
        const json& m = member(j, "matrix", ctx);
        if (m.is_array() && (m.size() != r.algebra.dim() || (!m.empty() && m[0].is_array() && m[0].size() != r.module_dim)))
          throw DimensionError(ctx + ".matrix: operator matrix is " + std::to_string(m.size()) + "x" +
                               std::to_string(m.empty() || !m[0].is_array() ? 0 : m[0].size()) + ", expected " +
                               std::to_string(r.algebra.dim()) + "x" + std::to_string(r.module_dim) +
                               " (dim lambda x dim V)");
        t = LinearOperator{r, matrix_from_json(m, r.algebra.dim(), r.module_dim, ctx + ".matrix")};
      }
      if (bundle.algebra) require_same_algebra(*bundle.algebra, t.rep.algebra, ctx);
      bundle.algebra = t.rep.algebra;
      bundle.representation = t.rep;
      bundle.op = std::move(t);
    } else if (kind == "cochain") {
      bundle.cochains.push_back(cochain_from_json(j, ctx));
    } else {
      throw ParseError(ctx + ".kind", "unknown kind \"" + kind + "\"");
    }
  }
  if (bundle.algebra) validate_leibniz(*bundle.algebra);
  if (bundle.representation) validate_representation(*bundle.representation);
  if (bundle.op) check_shapes(*bundle.op);
  bundle.digest = sha256_hex(digest_input);
  return bundle;
}

std::string sha256_hex(std::string_view data) {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out, &len, EVP_sha256(), nullptr) != 1)
    throw InvariantError("sha256 failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(out[i]);
  return ss.str();
}

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs_digest;
  json summary = json::object();
  for (const auto& [k, v] : r.summary) summary[k] = v;
  j["summary"] = summary;
  json tables = json::array();
  for (const auto& t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["tables"] = tables;
  j["verdict"] = r.verdict;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  if (!r.inputs_digest.empty()) out << "inputs:  " << r.inputs_digest << '\n';
  for (const auto& [k, v] : r.summary) out << k << ": " << v << '\n';
  for (const auto& t : r.tables) {
    out << '\n' << t.name << '\n';
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) text += "  ";
        text += cells[c];
        if (c + 1 < cells.size()) text.append(width[c] - cells[c].size(), ' ');
      }
      out << text << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  out << "\nverdict: " << r.verdict << '\n';
  if (r.seconds) out << "seconds: " << std::fixed << std::setprecision(3) << *r.seconds << '\n';
  return out.str();
}

Table cohomology_table(const CohomologyReport& r) {
  Table t{"cohomology", {"n", "dim C", "rank d", "dim Z", "dim B", "dim H"}, {}};
  for (const auto& row : r.rows)
    t.rows.push_back({std::to_string(row.degree), std::to_string(row.dim_c), std::to_string(row.rank_d),
                      std::to_string(row.dim_z), std::to_string(row.dim_b), std::to_string(row.dim_h)});
  return t;
}

Table les_table(const ExactnessReport& r) {
  Table t{"long exact sequence (" + to_string(r.kind) + ")",
          {"n", "H sub", "H mid", "H quot", "rk H(alpha)", "rk H(beta)", "rk c", "exact sub", "exact mid",
           "exact quot", "lift indep"},
          {}};
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  for (const auto& d : r.degrees)
    t.rows.push_back({std::to_string(d.degree), std::to_string(d.h_sub), std::to_string(d.h_mid),
                      std::to_string(d.h_quot), std::to_string(d.rank_alpha), std::to_string(d.rank_beta),
                      std::to_string(d.rank_connecting), yn(d.exact_at_sub), yn(d.exact_at_mid),
                      yn(d.exact_at_quot), yn(d.lift_independent)});
  return t;
}

Table matrix_table(const std::string& name, const Matrix& m, const std::vector<std::string>& row_names,
                   const std::vector<std::string>& column_names) {
  Table t{name, {""}, {}};
  for (const auto& c : column_names) t.columns.push_back(c);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row{r < row_names.size() ? row_names[r] : std::to_string(r + 1)};
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace lrb::io
