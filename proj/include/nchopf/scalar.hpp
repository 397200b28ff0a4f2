#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nchopf {

/// Exact rational coefficient. gmpxx keeps results of arithmetic in lowest
/// terms with a positive denominator.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws Error(InvalidArgument) on bad input or a
/// zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

/// s^e for any integer e; s must be nonzero when e < 0.
Scalar pow(const Scalar& s, long e);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace nchopf
