#include "nchopf/completion.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "nchopf/error.hpp"

namespace nchopf {

std::vector<Overlap> find_overlaps(const RewriteSystem& system, int maxdeg) {
  std::vector<Overlap> out;
  const auto& rules = system.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lead;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lead;
      // la = x·o, lb = o·y with o a proper nonempty border of both.
      std::size_t kmax = std::min(la.size(), lb.size());
      for (std::size_t k = 1; k < kmax; ++k) {
        if (la.sub(la.size() - k) != lb.sub(0, k)) continue;
        Word w = la + lb.sub(k);
        if (static_cast<int>(w.size()) <= maxdeg) out.push_back({std::move(w), a, b, k, false});
      }
      if (a != b && lb.size() <= la.size()) {
        for (auto pos = la.find(lb); pos != Word::npos; pos = la.find(lb, pos + 1)) {
          if (static_cast<int>(la.size()) <= maxdeg) out.push_back({la, a, b, pos, true});
        }
      }
    }
  }
  return out;
}

Polynomial s_polynomial(const RewriteSystem& system, const Overlap& o) {
  const RewriteRule& ra = system.rules().at(o.rule_a);
  const RewriteRule& rb = system.rules().at(o.rule_b);
  if (o.inclusion) {
    Word x = ra.lead.sub(0, o.offset);
    Word y = ra.lead.sub(o.offset + rb.lead.size());
    return ra.rhs - Polynomial::of(x) * rb.rhs * Polynomial::of(y);
  }
  Word x = ra.lead.sub(0, ra.lead.size() - o.offset);
  Word y = rb.lead.sub(o.offset);
  return ra.rhs * Polynomial::of(y) - Polynomial::of(x) * rb.rhs;
}

namespace {

using OverlapKey = std::tuple<std::string, std::string, std::size_t, bool>;

OverlapKey key_of(const RewriteSystem& s, const Overlap& o) {
  return {s.rules()[o.rule_a].lead.bytes(), s.rules()[o.rule_b].lead.bytes(), o.offset, o.inclusion};
}

ReductionOptions cap_for(int deg) {
  ReductionOptions opt;
  opt.degree_cap = std::max(2 * deg, 8);
  return opt;
}

}  // namespace

ConfluenceCertificate certify(const RewriteSystem& system, int maxdeg) {
  ConfluenceCertificate cert;
  cert.degree = maxdeg;
  cert.verdict = Verdict::ConfluentUpTo;
  for (const auto& o : find_overlaps(system, maxdeg)) {
    Polynomial r = system.normal_form(s_polynomial(system, o), cap_for(static_cast<int>(o.word.size())));
    if (!r.is_zero()) {
      cert.verdict = Verdict::Incomplete;
      cert.reason = "unresolved ambiguity " + system.alphabet().render(o.word);
      continue;
    }
    cert.resolved.push_back({o.word, system.rules()[o.rule_a].lead, system.rules()[o.rule_b].lead});
  }
  // Any ambiguity longer than maxdeg would be missed by the check above.
  std::size_t longest = 0;
  for (const auto& o : find_overlaps(system, std::numeric_limits<int>::max()))
    longest = std::max(longest, o.word.size());
  cert.closed = cert.confluent() && static_cast<int>(longest) <= maxdeg;
  for (const auto& r : system.rules())
    if (r.provenance == Provenance::Completion) cert.added.push_back(r);
  return cert;
}

CompletionResult complete(const RewriteSystem& input, int maxdeg, const CompletionLimits& limits) {
  if (maxdeg < 2) throw Error(ErrorKind::InvalidArgument, "completion degree must be at least 2");
  RewriteSystem system = input;
  std::set<OverlapKey> seen;
  std::string failure;
  std::size_t steps = 0;
  ConfluenceCertificate cert;
  // Inter-reduction can change a right-hand side after its ambiguities were
  // processed, so rounds repeat until the final check is clean.
  for (int round = 0; round < 8 && failure.empty(); ++round) {
    seen.clear();
    for (;; ++steps) {
      if (steps >= limits.max_steps) {
        failure = "step limit reached";
        break;
      }
      if (system.rules().size() > limits.max_rules) {
        failure = "rule limit reached";
        break;
      }
      const Overlap* next = nullptr;
      auto overlaps = find_overlaps(system, maxdeg);
      for (const auto& o : overlaps) {
        if (seen.count(key_of(system, o))) continue;
        if (!next || system.order().less(o.word, next->word)) next = &o;
      }
      if (!next) break;
      seen.insert(key_of(system, *next));
      Polynomial residual =
          system.normal_form(s_polynomial(system, *next), cap_for(static_cast<int>(next->word.size())));
      if (!residual.is_zero()) system.add_relation(residual, Provenance::Completion);
    }
    cert = certify(system, maxdeg);
    if (cert.confluent()) break;
  }
  if (!failure.empty()) {
    cert = certify(system, maxdeg);
    cert.verdict = Verdict::Incomplete;
    cert.closed = false;
    cert.reason = failure;
  }
  return {std::move(system), std::move(cert)};
}

}  // namespace nchopf
