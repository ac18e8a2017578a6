#include "lrb/rational.hpp"

#include <cctype>

#include "lrb/errors.hpp"

namespace lrb {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);

  if (!is_integer_literal(num)) {
    throw ParseError(std::string(text), "not a rational literal");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q = 1;
  if (slash != std::string_view::npos) {
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
      throw ParseError(std::string(text), "denominator must be a positive integer");
    }
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw ParseError(std::string(text), "zero denominator");
  }
  Scalar out(p, q);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

}  // namespace lrb
