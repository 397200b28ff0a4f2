#include "nchopf/alphabet.hpp"

#include <limits>

#include "nchopf/error.hpp"

namespace nchopf {

Word::Word(std::initializer_list<LetterId> letters) {
  for (LetterId id : letters) bytes_.push_back(static_cast<char>(id));
}

LetterId Alphabet::push(std::string name, Role role) {
  if (letters_.size() > std::numeric_limits<LetterId>::max())
    throw Error(ErrorKind::InvalidArgument, "alphabet is limited to 256 letters");
  if (name.empty() || index_.count(name) != 0)
    throw Error(ErrorKind::InvalidArgument, "duplicate or empty letter name '" + name + "'");
  auto id = static_cast<LetterId>(letters_.size());
  index_.emplace(name, id);
  letters_.push_back({std::move(name), std::move(role)});
  return id;
}

LetterId Alphabet::add_plain(std::string name) { return push(std::move(name), Role{}); }

LetterId Alphabet::add_group(std::string name) { return push(std::move(name), Role{RoleKind::GroupLike, {}, {}, {}}); }

LetterId Alphabet::add_inverse(std::string name, LetterId of) {
  if (role(of).kind != RoleKind::GroupLike || role(of).inverse)
    throw Error(ErrorKind::InvalidArgument, "'" + this->name(of) + "' is not a group generator without inverse");
  LetterId id = push(std::move(name), Role{RoleKind::GroupInverse, of, {}, {}});
  letters_[of].role.inverse = id;
  return id;
}

LetterId Alphabet::add_skew(std::string name, Word left, Word right) {
  if (!is_group_word(left) || !is_group_word(right))
    throw Error(ErrorKind::InvalidArgument, "skew-primitive tags of '" + name + "' must be group words");
  return push(std::move(name), Role{RoleKind::SkewPrimitive, {}, std::move(left), std::move(right)});
}

std::optional<LetterId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LetterId Alphabet::at(std::string_view name) const {
  auto id = find(name);
  if (!id) throw Error(ErrorKind::UnknownLetter, std::string(name));
  return *id;
}

bool Alphabet::is_group_word(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= size() || !is_group_letter(w[i])) return false;
  return true;
}

Word Alphabet::inverse_word(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) {
    const Role& r = role(w[i]);
    if (!is_group_letter(w[i]) || !r.inverse)
      throw Error(ErrorKind::MissingInverse, "letter '" + name(w[i]) + "' has no inverse");
    out.push_back(static_cast<char>(*r.inverse));
  }
  return Word(std::move(out));
}

Word Alphabet::word(std::string_view spaced) const {
  std::string out;
  std::size_t i = 0;
  while (i < spaced.size()) {
    while (i < spaced.size() && spaced[i] == ' ') ++i;
    std::size_t j = i;
    while (j < spaced.size() && spaced[j] != ' ') ++j;
    if (j > i) {
      auto tok = spaced.substr(i, j - i);
      if (tok != "1") out.push_back(static_cast<char>(at(tok)));
    }
    i = j;
  }
  return Word(std::move(out));
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

}  // namespace nchopf
