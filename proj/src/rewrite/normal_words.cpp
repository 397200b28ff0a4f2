#include "nchopf/normal_words.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "nchopf/error.hpp"

namespace nchopf {

namespace {

// Aho-Corasick automaton over the leading words; a state is dead once some
// leading word ends there.
class LeadAutomaton {
 public:
  LeadAutomaton(const RewriteSystem& system) : letters_(system.alphabet().size()) {
    add_node();
    for (const auto& r : system.rules()) {
      int s = 0;
      for (std::size_t i = 0; i < r.lead.size(); ++i) {
        int& nxt = next_[s * letters_ + r.lead[i]];
        if (nxt < 0) {
          int fresh = add_node();
          next_[s * letters_ + r.lead[i]] = fresh;
          s = fresh;
        } else {
          s = nxt;
        }
      }
      dead_[s] = true;
    }
    std::vector<int> fail(dead_.size(), 0);
    std::deque<int> queue;
    for (std::size_t a = 0; a < letters_; ++a) {
      int& t = next_[a];
      if (t < 0) {
        t = 0;
      } else {
        fail[t] = 0;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      dead_[s] = dead_[s] || dead_[fail[s]];
      for (std::size_t a = 0; a < letters_; ++a) {
        int& t = next_[s * letters_ + a];
        int via_fail = next_[fail[s] * letters_ + a];
        if (t < 0) {
          t = via_fail;
        } else {
          fail[t] = via_fail;
          queue.push_back(t);
        }
      }
    }
  }

  std::size_t states() const { return dead_.size(); }
  std::size_t letters() const { return letters_; }
  int step(int state, std::size_t letter) const { return next_[state * letters_ + letter]; }
  bool dead(int state) const { return dead_[state]; }

 private:
  int add_node() {
    next_.resize(next_.size() + letters_, -1);
    dead_.push_back(false);
    return static_cast<int>(dead_.size()) - 1;
  }

  std::size_t letters_;
  std::vector<int> next_;
  std::vector<char> dead_;
};

void extend(const LeadAutomaton& automaton, int state, std::string& prefix, int remaining,
            std::vector<std::vector<Word>>& out) {
  out[prefix.size()].push_back(Word(prefix));
  if (remaining == 0) return;
  for (std::size_t a = 0; a < automaton.letters(); ++a) {
    int s = automaton.step(state, a);
    if (automaton.dead(s)) continue;
    prefix.push_back(static_cast<char>(a));
    extend(automaton, s, prefix, remaining - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Word>> enumerate_normal_words(const RewriteSystem& system,
                                                      const ConfluenceCertificate& certificate, int maxlen) {
  if (maxlen < 0) throw Error(ErrorKind::InvalidArgument, "negative length");
  if (!certificate.covers(maxlen))
    throw Error(ErrorKind::NoCertificate, "system is not certified up to length " + std::to_string(maxlen));
  LeadAutomaton automaton(system);
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(maxlen) + 1);
  std::string prefix;
  extend(automaton, 0, prefix, maxlen, out);
  for (auto& bucket : out) std::sort(bucket.begin(), bucket.end(), OrderLess{&system.order()});
  return out;
}

std::vector<std::uint64_t> count_normal_words(const RewriteSystem& system, int maxlen) {
  if (maxlen < 0) throw Error(ErrorKind::InvalidArgument, "negative length");
  LeadAutomaton automaton(system);
  std::vector<std::uint64_t> ways(automaton.states(), 0), next(automaton.states());
  ways[0] = 1;
  std::vector<std::uint64_t> counts;
  counts.reserve(static_cast<std::size_t>(maxlen) + 1);
  for (int len = 0;; ++len) {
    std::uint64_t total = 0;
    for (auto w : ways)
      if (__builtin_add_overflow(total, w, &total)) throw Error(ErrorKind::InvalidArgument, "count overflow");
    counts.push_back(total);
    if (len == maxlen) break;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (ways[s] == 0) continue;
      for (std::size_t a = 0; a < automaton.letters(); ++a) {
        int t = automaton.step(static_cast<int>(s), a);
        if (automaton.dead(t)) continue;
        if (__builtin_add_overflow(next[t], ways[s], &next[t]))
          throw Error(ErrorKind::InvalidArgument, "count overflow");
      }
    }
    std::swap(ways, next);
  }
  return counts;
}

std::vector<std::uint64_t> cumulative(std::span<const std::uint64_t> per_length) {
  std::vector<std::uint64_t> out;
  std::uint64_t running = 0;
  for (auto c : per_length) out.push_back(running += c);
  return out;
}

double gk_estimate(std::span<const std::uint64_t> cumulative_counts) {
  if (cumulative_counts.size() < 8)
    throw Error(ErrorKind::InsufficientData, "need at least 8 cumulative counts");
  std::size_t last = cumulative_counts.size() - 1;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = last / 2; i <= last; ++i) {
    if (cumulative_counts[i] == 0) throw Error(ErrorKind::InsufficientData, "zero count");
    double x = std::log(static_cast<double>(i) + 1.0);
    double y = std::log(static_cast<double>(cumulative_counts[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace nchopf
