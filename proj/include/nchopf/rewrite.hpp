#pragma once

#include <optional>
#include <vector>

#include "nchopf/alphabet.hpp"
#include "nchopf/order.hpp"
#include "nchopf/polynomial.hpp"

namespace nchopf {

enum class Provenance { Input, Completion };

const char* to_string(Provenance p);

/// lead -> rhs, with every word of rhs strictly below lead.
struct RewriteRule {
  Word lead;
  Polynomial rhs;
  Provenance provenance = Provenance::Input;

  /// lead - rhs, the relation the rule encodes.
  Polynomial relation() const { return Polynomial::of(lead) - rhs; }
};

/// Makes the leading word (under `order`) the left-hand side with
/// coefficient 1. Throws ZeroRelation for 0.
RewriteRule orient(const Polynomial& relation, const MonomialOrder& order);

enum class Strategy {
  /// Largest word first; among redexes the lowest rule index, then the
  /// leftmost occurrence.
  LowestRuleLeftmost,
  /// Smallest reducible word first, rightmost occurrence, highest rule index.
  /// Only used to cross-check confluence.
  RightmostLastRule,
};

struct ReductionOptions {
  /// Maximum word length allowed during reduction. Defaults to
  /// max(2 * input degree, 8).
  std::optional<int> degree_cap;
  Strategy strategy = Strategy::LowestRuleLeftmost;
};

/// Oriented rules plus the monomial order. Rules never share a leading word
/// and each right-hand side is kept in normal form.
class RewriteSystem {
 public:
  RewriteSystem(AlphabetPtr alphabet, MonomialOrder order);

  static RewriteSystem from_relations(AlphabetPtr alphabet, MonomialOrder order,
                                      const std::vector<Polynomial>& relations);

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  std::size_t max_lead_length() const;

  Polynomial normal_form(const Polynomial& p, const ReductionOptions& options = {}) const;
  Polynomial normal_form(const Word& w) const { return normal_form(Polynomial::of(w)); }
  bool is_normal(const Word& w) const;

  /// Reduces the relation, orients it and inter-reduces the system. Rules
  /// whose leading word becomes reducible are removed and re-added as
  /// relations. Returns false when the relation reduced to zero.
  bool add_relation(const Polynomial& relation, Provenance provenance = Provenance::Input);

 private:
  struct Redex {
    std::size_t rule;
    std::size_t pos;
  };
  std::optional<Redex> find_redex(const Word& w, Strategy strategy) const;
  Polynomial reduce_largest_first(const Polynomial& p, int cap) const;
  Polynomial reduce_smallest_first(const Polynomial& p, int cap) const;
  void insert_rule(RewriteRule rule, std::vector<std::pair<Polynomial, Provenance>>& pending);

  AlphabetPtr alphabet_;
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
};

}  // namespace nchopf
