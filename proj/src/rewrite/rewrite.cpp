#include "nchopf/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "nchopf/error.hpp"

namespace nchopf {

const char* to_string(Provenance p) { return p == Provenance::Input ? "input" : "completion"; }

RewriteRule orient(const Polynomial& relation, const MonomialOrder& order) {
  if (relation.is_zero()) throw Error(ErrorKind::ZeroRelation, "cannot orient the zero relation");
  const Term* lead = &*relation.begin();
  for (const auto& t : relation)
    if (order.less(lead->word, t.word)) lead = &t;
  Scalar inv = Scalar(1) / lead->coeff;
  std::vector<Term> rhs;
  for (const auto& t : relation) {
    if (t.word == lead->word) continue;
    if (!order.less(t.word, lead->word))
      throw Error(ErrorKind::DegreeIncreasing, "replacement word is not below the leading word");
    rhs.push_back({t.word, -t.coeff * inv});
  }
  return {lead->word, Polynomial::from_terms(std::move(rhs)), Provenance::Input};
}

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, MonomialOrder order)
    : alphabet_(std::move(alphabet)), order_(std::move(order)) {}

RewriteSystem RewriteSystem::from_relations(AlphabetPtr alphabet, MonomialOrder order,
                                            const std::vector<Polynomial>& relations) {
  RewriteSystem s(std::move(alphabet), std::move(order));
  for (const auto& r : relations) s.add_relation(r, Provenance::Input);
  return s;
}

std::size_t RewriteSystem::max_lead_length() const {
  std::size_t m = 0;
  for (const auto& r : rules_) m = std::max(m, r.lead.size());
  return m;
}

std::optional<RewriteSystem::Redex> RewriteSystem::find_redex(const Word& w, Strategy strategy) const {
  std::optional<Redex> best;
  if (strategy == Strategy::LowestRuleLeftmost) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      auto pos = w.find(rules_[i].lead);
      if (pos != Word::npos) return Redex{i, pos};
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto pos = w.rfind(rules_[i].lead);
    if (pos == Word::npos) continue;
    if (!best || pos >= best->pos) best = Redex{i, pos};
  }
  return best;
}

bool RewriteSystem::is_normal(const Word& w) const { return !find_redex(w, Strategy::LowestRuleLeftmost); }

Polynomial RewriteSystem::normal_form(const Polynomial& p, const ReductionOptions& options) const {
  int cap = options.degree_cap.value_or(std::max(2 * p.degree(), 8));
  if (options.strategy == Strategy::LowestRuleLeftmost) return reduce_largest_first(p, cap);
  return reduce_smallest_first(p, cap);
}

Polynomial RewriteSystem::reduce_largest_first(const Polynomial& p, int cap) const {
  std::map<Word, Scalar, OrderLess> work(OrderLess{&order_});
  for (const auto& t : p) work.emplace(t.word, t.coeff);
  std::vector<Term> done;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = std::move(it->second);
    work.erase(it);
    auto redex = find_redex(w, Strategy::LowestRuleLeftmost);
    if (!redex) {
      done.push_back({std::move(w), std::move(c)});
      continue;
    }
    const RewriteRule& rule = rules_[redex->rule];
    Word prefix = w.sub(0, redex->pos);
    Word suffix = w.sub(redex->pos + rule.lead.size());
    for (const auto& t : rule.rhs) {
      Word nw = prefix + t.word + suffix;
      if (static_cast<int>(nw.size()) > cap)
        throw Error(ErrorKind::DegreeBudgetExceeded, "intermediate word exceeds degree " + std::to_string(cap));
      auto [slot, inserted] = work.try_emplace(std::move(nw), 0);
      slot->second += c * t.coeff;
      if (is_zero(slot->second)) work.erase(slot);
    }
  }
  return Polynomial::from_terms(std::move(done));
}

Polynomial RewriteSystem::reduce_smallest_first(const Polynomial& p, int cap) const {
  Polynomial cur = p;
  for (;;) {
    // Terms are stored in ShortLex order; take the smallest reducible one.
    const Term* target = nullptr;
    std::optional<Redex> redex;
    for (const auto& t : cur) {
      redex = find_redex(t.word, Strategy::RightmostLastRule);
      if (redex) {
        target = &t;
        break;
      }
    }
    if (!target) return cur;
    const RewriteRule& rule = rules_[redex->rule];
    Word prefix = target->word.sub(0, redex->pos);
    Word suffix = target->word.sub(redex->pos + rule.lead.size());
    Polynomial step = Polynomial::of(prefix) * rule.rhs * Polynomial::of(suffix) * target->coeff -
                      Polynomial::of(target->word, target->coeff);
    if (step.degree() > cap)
      throw Error(ErrorKind::DegreeBudgetExceeded, "intermediate word exceeds degree " + std::to_string(cap));
    cur += step;
  }
}

void RewriteSystem::insert_rule(RewriteRule rule, std::vector<std::pair<Polynomial, Provenance>>& pending) {
  std::vector<RewriteRule> kept;
  kept.reserve(rules_.size() + 1);
  for (auto& r : rules_) {
    if (r.lead.contains(rule.lead)) {
      pending.emplace_back(r.relation(), r.provenance);
    } else {
      kept.push_back(std::move(r));
    }
  }
  kept.push_back(std::move(rule));
  rules_ = std::move(kept);
  ReductionOptions unbounded;
  for (auto& r : rules_) {
    unbounded.degree_cap = std::max<int>(2 * static_cast<int>(r.lead.size()), 8);
    r.rhs = normal_form(r.rhs, unbounded);
  }
}

bool RewriteSystem::add_relation(const Polynomial& relation, Provenance provenance) {
  bool added = false;
  std::vector<std::pair<Polynomial, Provenance>> pending{{relation, provenance}};
  while (!pending.empty()) {
    auto [rel, prov] = std::move(pending.back());
    pending.pop_back();
    Polynomial reduced = normal_form(rel);
    if (reduced.is_zero()) continue;
    RewriteRule rule = orient(reduced, order_);
    rule.provenance = prov;
    insert_rule(std::move(rule), pending);
    added = true;
  }
  return added;
}

}  // namespace nchopf
