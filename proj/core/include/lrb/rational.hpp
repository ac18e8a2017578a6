#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lrb {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (q > 0). The result is canonicalized, so "2/4"
/// reads as 1/2. Throws ParseError on anything else.
Scalar parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace lrb
