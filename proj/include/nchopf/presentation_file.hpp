#pragma once

#include <string>
#include <string_view>

#include "nchopf/expr.hpp"
#include "nchopf/presentation.hpp"

namespace nchopf {

/// Parses a presentation file. Two shapes are accepted.
///
/// Group mode builds one of the lifting families from group data:
///
///   [group]
///   generators = g h
///   g = 1 0
///   [eta]
///   values = 1 3
///   [xi]
///   mode = jordanian        # or: additive (takes lambda), free
///   values = 0 3            # optional for jordanian, checked if present
///   [params]
///   lambda = 1/2
///
/// Raw mode lists everything explicitly:
///
///   [generators]
///   T : group
///   T_inv : inverse T
///   K : skew T_inv T        # a ∈ P_{left,right}; tags are words, '*'-joined
///   x : plain
///   [precedence]
///   K > T > T_inv
///   [weights]               # optional
///   K = 2
///   [relations]
///   K T - T K = T^2 - 1
///
/// [relations] and [params] may appear in both modes; in group mode the
/// relations are appended to the family's own. Errors are ParseError or
/// UnknownLetter with line and column.
AlgebraPresentation parse_presentation(std::string_view text);

/// Reads a file, or resolves "@name" to a built-in family with `params`
/// (wujor, ujor_lambda, U_xi, ujor_D, ohn, jordan_plane, example).
AlgebraPresentation load_presentation(const std::string& path_or_name, const ParamTable& params = {});

AlgebraPresentation named_presentation(std::string_view name, const ParamTable& params = {});

/// Parameter bindings of a presentation as a lookup table.
ParamTable param_table(const AlgebraPresentation& p);

}  // namespace nchopf
