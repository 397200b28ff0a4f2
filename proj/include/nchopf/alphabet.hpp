#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nchopf {

using LetterId = std::uint8_t;

/// A word over an alphabet: letter ids packed into a byte string. The empty
/// word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::string bytes) : bytes_(std::move(bytes)) {}
  Word(std::initializer_list<LetterId> letters);

  static Word letter(LetterId id) { return Word(std::string(1, static_cast<char>(id))); }

  std::size_t size() const noexcept { return bytes_.size(); }
  bool empty() const noexcept { return bytes_.empty(); }
  LetterId operator[](std::size_t i) const { return static_cast<LetterId>(bytes_[i]); }

  Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(bytes_.substr(pos, len));
  }
  /// Position of the first occurrence of `w` at or after `from`, or npos.
  std::size_t find(const Word& w, std::size_t from = 0) const { return bytes_.find(w.bytes_, from); }
  std::size_t rfind(const Word& w) const { return bytes_.rfind(w.bytes_); }
  bool contains(const Word& w) const { return bytes_.find(w.bytes_) != std::string::npos; }

  Word& operator+=(const Word& w) {
    bytes_ += w.bytes_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  const std::string& bytes() const noexcept { return bytes_; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Byte order (letters compare as unsigned ids). Not a monomial order.
  friend auto operator<=>(const Word& a, const Word& b) { return a.bytes_.compare(b.bytes_) <=> 0; }

  static constexpr std::size_t npos = std::string::npos;

 private:
  std::string bytes_;
};

/// Canonical storage order: shorter first, then by letter id.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.bytes()); }
};

enum class RoleKind { Plain, GroupLike, GroupInverse, SkewPrimitive };

/// Hopf role of a generator. A SkewPrimitive `a` with tags (l, r) satisfies
/// Δ(a) = a⊗r + l⊗a; the tags are words in group letters.
struct Role {
  RoleKind kind = RoleKind::Plain;
  std::optional<LetterId> inverse;  // partner letter for GroupLike / GroupInverse
  Word left;
  Word right;
};

struct LetterInfo {
  std::string name;
  Role role;
};

/// Generators of a free algebra with their names and Hopf roles. Built once,
/// then shared read-only.
class Alphabet {
 public:
  LetterId add_plain(std::string name);
  LetterId add_group(std::string name);
  /// Adds the inverse letter of the group-like `of`.
  LetterId add_inverse(std::string name, LetterId of);
  LetterId add_skew(std::string name, Word left, Word right);

  std::size_t size() const noexcept { return letters_.size(); }
  const LetterInfo& info(LetterId id) const { return letters_.at(id); }
  const std::string& name(LetterId id) const { return letters_.at(id).name; }
  const Role& role(LetterId id) const { return letters_.at(id).role; }
  std::optional<LetterId> find(std::string_view name) const;
  LetterId at(std::string_view name) const;

  bool is_group_letter(LetterId id) const {
    auto k = role(id).kind;
    return k == RoleKind::GroupLike || k == RoleKind::GroupInverse;
  }
  bool is_group_word(const Word& w) const;

  /// Inverse of a word in group letters: reversed, each letter swapped with
  /// its partner. Throws MissingInverse.
  Word inverse_word(const Word& w) const;

  /// Parses space-separated letter names ("1" or "" is the empty word).
  Word word(std::string_view spaced_names) const;
  /// Letters separated by single spaces; the empty word renders as "1".
  std::string render(const Word& w) const;

 private:
  LetterId push(std::string name, Role role);

  std::vector<LetterInfo> letters_;
  std::unordered_map<std::string, LetterId> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace nchopf
