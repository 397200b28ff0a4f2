#pragma once

#include <map>
#include <string>
#include <string_view>

#include "nchopf/alphabet.hpp"
#include "nchopf/polynomial.hpp"

namespace nchopf {

using ParamTable = std::map<std::string, Scalar, std::less<>>;

/// Parses an expression over `alphabet`:
///
///   sum     := term (('+' | '-') term)*
///   term    := '-' term | product
///   product := power (['*'] power)*
///   power   := atom ['^' integer]       (exponent only on identifiers)
///   atom    := identifier | integer ['/' integer] | '(' sum ')'
///
/// Identifiers name letters first, then parameters. Errors carry the 1-based
/// column (and `line`, for callers that parse files).
Polynomial parse_expression(std::string_view text, const Alphabet& alphabet, const ParamTable& params = {},
                            int line = 1, int column_offset = 0);

}  // namespace nchopf
