#include "nchopf/hopf_ops.hpp"

#include "nchopf/error.hpp"

namespace nchopf {

Substitution Substitution::identity(std::size_t size) {
  Substitution s(size);
  for (std::size_t i = 0; i < size; ++i) s.set(static_cast<LetterId>(i), Polynomial::of(Word::letter(static_cast<LetterId>(i))));
  return s;
}

Substitution& Substitution::set(LetterId letter, Polynomial image) {
  if (letter >= images_.size()) images_.resize(letter + 1u);
  images_[letter] = std::move(image);
  return *this;
}

const std::optional<Polynomial>& Substitution::image(LetterId letter) const {
  static const std::optional<Polynomial> none;
  return letter < images_.size() ? images_[letter] : none;
}

Polynomial Substitution::apply(const Word& w) const {
  Polynomial out = Polynomial::one();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& img = image(w[i]);
    if (!img) throw Error(ErrorKind::MissingImage, "no image for letter id " + std::to_string(w[i]));
    out = out * *img;
  }
  return out;
}

Polynomial Substitution::apply(const Polynomial& p) const {
  Polynomial out;
  for (const auto& t : p) out += apply(t.word) * t.coeff;
  return out;
}

namespace {

struct Split {
  Word left;
  Word right;
};

// Δ of a single letter as a list of pure tensors with coefficient 1.
std::vector<Split> letter_coproduct(LetterId id, const Alphabet& alphabet) {
  const Role& r = alphabet.role(id);
  Word a = Word::letter(id);
  switch (r.kind) {
    case RoleKind::GroupLike:
    case RoleKind::GroupInverse:
      return {{a, a}};
    case RoleKind::SkewPrimitive:
      return {{a, r.right}, {r.left, a}};
    case RoleKind::Plain:
      break;
  }
  throw Error(ErrorKind::MissingRole, "letter '" + alphabet.name(id) + "' has no Hopf role");
}

}  // namespace

Tensor2 free_coproduct(const Word& w, const Alphabet& alphabet) {
  std::vector<Split> acc{{Word(), Word()}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto parts = letter_coproduct(w[i], alphabet);
    std::vector<Split> next;
    next.reserve(acc.size() * parts.size());
    for (const auto& x : acc)
      for (const auto& y : parts) next.push_back({x.left + y.left, x.right + y.right});
    acc = std::move(next);
  }
  std::vector<Tensor2::Entry> entries;
  entries.reserve(acc.size());
  for (auto& s : acc) entries.push_back({{std::move(s.left), std::move(s.right)}, 1});
  return Tensor2::from_entries(std::move(entries));
}

Tensor2 free_coproduct(const Polynomial& p, const Alphabet& alphabet) {
  std::vector<Tensor2::Entry> entries;
  for (const auto& t : p) {
    for (const auto& e : free_coproduct(t.word, alphabet)) entries.push_back({e.key, e.coeff * t.coeff});
  }
  return Tensor2::from_entries(std::move(entries));
}

Scalar counit_eval(const Word& w, const Alphabet& alphabet) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (alphabet.role(w[i]).kind) {
      case RoleKind::GroupLike:
      case RoleKind::GroupInverse:
        break;
      case RoleKind::SkewPrimitive:
        return 0;
      case RoleKind::Plain:
        throw Error(ErrorKind::MissingRole, "letter '" + alphabet.name(w[i]) + "' has no Hopf role");
    }
  }
  return 1;
}

Scalar counit_eval(const Polynomial& p, const Alphabet& alphabet) {
  Scalar out = 0;
  for (const auto& t : p) out += counit_eval(t.word, alphabet) * t.coeff;
  return out;
}

namespace {

Polynomial letter_antipode(LetterId id, const Alphabet& alphabet) {
  const Role& r = alphabet.role(id);
  switch (r.kind) {
    case RoleKind::GroupLike:
    case RoleKind::GroupInverse:
      if (!r.inverse) throw Error(ErrorKind::MissingInverse, "letter '" + alphabet.name(id) + "' has no inverse");
      return Polynomial::of(Word::letter(*r.inverse));
    case RoleKind::SkewPrimitive:
      return Polynomial::of(alphabet.inverse_word(r.left) + Word::letter(id) + alphabet.inverse_word(r.right), -1);
    case RoleKind::Plain:
      break;
  }
  throw Error(ErrorKind::MissingRole, "letter '" + alphabet.name(id) + "' has no Hopf role");
}

}  // namespace

Polynomial antipode_apply(const Polynomial& p, const Alphabet& alphabet) {
  Polynomial out;
  for (const auto& t : p) {
    Polynomial img = Polynomial::constant(t.coeff);
    // S(xy) = S(y)S(x): walk the word right to left.
    for (std::size_t i = t.word.size(); i-- > 0;) img = img * letter_antipode(t.word[i], alphabet);
    out += img;
  }
  return out;
}

namespace {

Tensor3 coproduct_on_leg(const Tensor2& t, const Alphabet& alphabet, std::size_t leg) {
  std::vector<Tensor3::Entry> out;
  for (const auto& e : t) {
    for (const auto& d : free_coproduct(e.key[leg], alphabet)) {
      Tensor3::Entry ne;
      if (leg == 0) {
        ne.key = {d.key[0], d.key[1], e.key[1]};
      } else {
        ne.key = {e.key[0], d.key[0], d.key[1]};
      }
      ne.coeff = e.coeff * d.coeff;
      out.push_back(std::move(ne));
    }
  }
  return Tensor3::from_entries(std::move(out));
}

}  // namespace

Tensor3 coproduct_left(const Tensor2& t, const Alphabet& alphabet) { return coproduct_on_leg(t, alphabet, 0); }
Tensor3 coproduct_right(const Tensor2& t, const Alphabet& alphabet) { return coproduct_on_leg(t, alphabet, 1); }

Polynomial counit_left(const Tensor2& t, const Alphabet& alphabet) {
  std::vector<Term> out;
  for (const auto& e : t) out.push_back({e.key[1], e.coeff * counit_eval(e.key[0], alphabet)});
  return Polynomial::from_terms(std::move(out));
}

Polynomial counit_right(const Tensor2& t, const Alphabet& alphabet) {
  std::vector<Term> out;
  for (const auto& e : t) out.push_back({e.key[0], e.coeff * counit_eval(e.key[1], alphabet)});
  return Polynomial::from_terms(std::move(out));
}

}  // namespace nchopf
