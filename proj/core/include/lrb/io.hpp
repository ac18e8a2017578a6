#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrb/algebra.hpp"
#include "lrb/cochain.hpp"
#include "lrb/cohomology.hpp"
#include "lrb/exact_sequences.hpp"
#include "lrb/operators.hpp"

namespace lrb::io {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ParseError carries the path and the
/// parser's line/column.
json load_json_file(const std::filesystem::path& path);

Scalar scalar_from_json(const json& j, const std::string& context);
json to_json(const Scalar& s);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& context);
json to_json(const Matrix& m);

// Nested "algebra" / "representation" members may be inline objects or
// paths relative to `base_dir`.
Algebra algebra_from_json(const json& j, const std::string& context = "algebra");
json to_json(const Algebra& a);
Representation representation_from_json(const json& j, const std::filesystem::path& base_dir,
                                         const std::string& context = "representation");
json to_json(const Representation& r);
LinearOperator operator_from_json(const json& j, const std::filesystem::path& base_dir,
                                  const std::string& context = "operator");
json to_json(const LinearOperator& t);

/// {"kind": "cochain", "arity": n, "domain_dim": d, "target_dim": w,
///  "tensor": w rows of d^n entries}
Cochain cochain_from_json(const json& j, const std::string& context = "cochain");
json to_json(const Cochain& c);

/// Parsed and cross-validated inputs of one command.
struct FixtureBundle {
  std::vector<std::filesystem::path> files;
  std::optional<Algebra> algebra;
  std::optional<Representation> representation;
  std::optional<LinearOperator> op;
  std::vector<Cochain> cochains;
  /// sha256 over the file names and contents, in argument order.
  std::string digest;
};

/// Each file holds one object whose "kind" is algebra, representation,
/// operator or cochain. Later files refine earlier ones: an operator without its own
/// "representation" uses the one given before it. Validates the Leibniz
/// identity, the representation axioms and all shapes before returning.
FixtureBundle parse_fixture(const std::vector<std::filesystem::path>& paths);

std::string sha256_hex(std::string_view data);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::string inputs_digest;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<Table> tables;
  /// "ok" for computations, "true"/"false" for verdicts.
  std::string verdict = "ok";
  std::optional<double> seconds;
};

json to_json(const Report& r);
/// Same content as to_json, laid out for a terminal.
std::string render_text(const Report& r);

Table cohomology_table(const CohomologyReport& r);
Table les_table(const ExactnessReport& r);
Table matrix_table(const std::string& name, const Matrix& m, const std::vector<std::string>& row_names,
                   const std::vector<std::string>& column_names);

}  // namespace lrb::io
