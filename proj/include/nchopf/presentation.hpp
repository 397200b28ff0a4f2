#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nchopf/alphabet.hpp"
#include "nchopf/group.hpp"
#include "nchopf/order.hpp"
#include "nchopf/polynomial.hpp"
#include "nchopf/rewrite.hpp"

namespace nchopf {

/// Ordered basis (1 - g, a_1, ..., a_k) of the (g,1)-skew-primitives that the
/// adjoint action is read on.
struct SkewBasis {
  Word g;
  std::vector<LetterId> letters;
};

/// Everything needed to build the quotient algebra and its Hopf structure:
/// typed alphabet, relations, order, parameter bindings.
struct AlgebraPresentation {
  std::string label;
  AlphabetPtr alphabet;
  std::vector<Polynomial> relations;
  MonomialOrder order;
  std::vector<std::pair<std::string, Scalar>> params;
  std::optional<SkewBasis> basis;
  /// (generator, inverse) letter pairs of the underlying free abelian group,
  /// in generator order.
  std::vector<std::pair<LetterId, LetterId>> group_generators;

  /// Group word g_1^{e_1} ... g_n^{e_n}, inverse letters for negative
  /// exponents.
  Word group_word(const Exponents& h) const;
  const Scalar* param(std::string_view name) const;

  /// Oriented and inter-reduced, not yet completed.
  RewriteSystem rewrite_system() const { return RewriteSystem::from_relations(alphabet, order, relations); }
};

}  // namespace nchopf
