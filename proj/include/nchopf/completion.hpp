#pragma once

#include <string>
#include <vector>

#include "nchopf/rewrite.hpp"

namespace nchopf {

/// An ambiguity of the rule set: `word` can be rewritten by rule_a and by
/// rule_b. For an overlap, lead_a = x·o and lead_b = o·y with |o| = offset
/// and word = x·o·y; for an inclusion, lead_a = x·lead_b·y with |x| = offset.
struct Overlap {
  Word word;
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  std::size_t offset = 0;
  bool inclusion = false;
};

/// All ambiguities with |word| <= maxdeg.
std::vector<Overlap> find_overlaps(const RewriteSystem& system, int maxdeg);

/// Difference of the two one-step rewrites of the ambiguity word.
Polynomial s_polynomial(const RewriteSystem& system, const Overlap& overlap);

enum class Verdict { ConfluentUpTo, Incomplete };

struct ResolvedOverlap {
  Word word;
  Word lead_a;
  Word lead_b;
};

struct ConfluenceCertificate {
  int degree = 0;
  Verdict verdict = Verdict::Incomplete;
  /// True when every ambiguity of the final rule set has degree <= degree,
  /// so the diamond lemma gives confluence in all degrees.
  bool closed = false;
  std::vector<ResolvedOverlap> resolved;
  std::vector<RewriteRule> added;
  std::string reason;  // why the verdict is Incomplete

  bool confluent() const { return verdict == Verdict::ConfluentUpTo; }
  /// Normal forms of inputs of degree <= deg are certified unique.
  bool covers(int deg) const { return confluent() && (closed || deg <= degree); }
};

struct CompletionLimits {
  std::size_t max_rules = 400;
  std::size_t max_steps = 20000;
};

struct CompletionResult {
  RewriteSystem system;
  ConfluenceCertificate certificate;
};

/// Degree-bounded completion: resolves ambiguities of degree <= maxdeg,
/// smallest ambiguity word first, appending nonzero residuals as rules.
CompletionResult complete(const RewriteSystem& system, int maxdeg, const CompletionLimits& limits = {});

/// Re-checks every ambiguity of degree <= maxdeg without adding rules.
ConfluenceCertificate certify(const RewriteSystem& system, int maxdeg);

}  // namespace nchopf
