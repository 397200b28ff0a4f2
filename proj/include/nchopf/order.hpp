#pragma once

#include <vector>

#include "nchopf/alphabet.hpp"

namespace nchopf {

/// Graded lexicographic order on words: weighted degree first, then length,
/// then lexicographic by letter precedence. All weights are positive, so the
/// order is a well-order compatible with concatenation.
///
/// Group letters default to weight 1 and skew-primitive letters to weight 2.
/// With unit weights this is plain deglex.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// `descending` lists every letter of the alphabet, highest precedence
  /// first. Weights default by role.
  MonomialOrder(const Alphabet& alphabet, const std::vector<LetterId>& descending);
  MonomialOrder(const Alphabet& alphabet, const std::vector<LetterId>& descending, std::vector<int> weights);

  bool less(const Word& a, const Word& b) const;
  bool greater(const Word& a, const Word& b) const { return less(b, a); }
  int weight(const Word& w) const;
  int letter_weight(LetterId id) const { return weights_.at(id); }
  int rank(LetterId id) const { return ranks_.at(id); }
  const std::vector<LetterId>& precedence() const noexcept { return descending_; }

  static int default_weight(const Role& role);

 private:
  std::vector<int> ranks_;    // larger rank = higher precedence
  std::vector<int> weights_;
  std::vector<LetterId> descending_;
};

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

}  // namespace nchopf
