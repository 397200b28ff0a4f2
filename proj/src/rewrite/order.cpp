#include "nchopf/order.hpp"

#include "nchopf/error.hpp"

namespace nchopf {

int MonomialOrder::default_weight(const Role& role) { return role.kind == RoleKind::SkewPrimitive ? 2 : 1; }

MonomialOrder::MonomialOrder(const Alphabet& alphabet, const std::vector<LetterId>& descending)
    : MonomialOrder(alphabet, descending, [&] {
        std::vector<int> w(alphabet.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = default_weight(alphabet.role(static_cast<LetterId>(i)));
        return w;
      }()) {}

MonomialOrder::MonomialOrder(const Alphabet& alphabet, const std::vector<LetterId>& descending,
                             std::vector<int> weights)
    : ranks_(alphabet.size(), -1), weights_(std::move(weights)), descending_(descending) {
  if (weights_.size() != alphabet.size())
    throw Error(ErrorKind::InvalidArgument, "one weight per letter required");
  for (int w : weights_)
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "letter weights must be positive");
  int rank = static_cast<int>(descending.size());
  for (LetterId id : descending) {
    if (id >= ranks_.size() || ranks_[id] != -1)
      throw Error(ErrorKind::InvalidArgument, "precedence lists a letter twice or an unknown letter");
    ranks_[id] = rank--;
  }
  for (std::size_t i = 0; i < ranks_.size(); ++i)
    if (ranks_[i] == -1)
      throw Error(ErrorKind::InvalidArgument,
                  "precedence does not cover letter '" + alphabet.name(static_cast<LetterId>(i)) + "'");
}

int MonomialOrder::weight(const Word& w) const {
  int total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += weights_[w[i]];
  return total;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return ranks_[a[i]] < ranks_[b[i]];
  }
  return false;
}

}  // namespace nchopf
