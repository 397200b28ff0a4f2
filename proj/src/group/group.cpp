#include "nchopf/group.hpp"

#include "nchopf/error.hpp"

namespace nchopf {

Exponents add(const Exponents& h, const Exponents& k) {
  if (h.size() != k.size()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
  Exponents out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = h[i] + k[i];
  return out;
}

Exponents negate(const Exponents& h) {
  Exponents out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = -h[i];
  return out;
}

Exponents unit_vector(std::size_t rank, std::size_t i, long e) {
  Exponents out(rank, 0);
  out.at(i) = e;
  return out;
}

void GroupSpec::validate() const {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "group rank must be at least 1");
  if (g.size() != generators.size()) throw Error(ErrorKind::InvalidArgument, "g must have one exponent per generator");
  bool nonzero = false;
  for (long e : g) nonzero = nonzero || e != 0;
  if (!nonzero) throw Error(ErrorKind::InvalidArgument, "g must not be the identity");
}

GroupSpec GroupSpec::cyclic(std::string name) { return GroupSpec{{std::move(name)}, {1}}; }

Character::Character(std::vector<Scalar> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (is_zero(v)) throw Error(ErrorKind::InvalidArgument, "character values must be nonzero");
}

Scalar Character::operator()(const Exponents& h) const {
  if (h.size() != values_.size()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
  Scalar out = 1;
  for (std::size_t i = 0; i < h.size(); ++i) out *= pow(values_[i], h[i]);
  return out;
}

bool Character::is_trivial() const {
  for (const auto& v : values_)
    if (v != 1) return false;
  return true;
}

TwistedDerivation::TwistedDerivation(Character chi, std::vector<Scalar> values)
    : chi_(std::move(chi)), values_(std::move(values)) {
  if (values_.size() != chi_.rank()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
}

TwistedDerivation TwistedDerivation::additive(std::vector<Scalar> values) {
  Character eps = Character::trivial(values.size());
  return TwistedDerivation(std::move(eps), std::move(values));
}

Scalar TwistedDerivation::operator()(const Exponents& h) const {
  if (h.size() != values_.size()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
  // Fold generator powers with η(ht) = χ(h)η(t) + χ(t)η(h); the power rule
  // η(x^e) = e χ(x)^(e-1) η(x) also holds for negative e.
  Scalar chi_acc = 1;
  Scalar eta_acc = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    const Scalar& c = chi_.values()[i];
    Scalar chi_t = pow(c, h[i]);
    Scalar eta_t = Scalar(h[i]) * pow(c, h[i] - 1) * values_[i];
    eta_acc = chi_acc * eta_t + chi_t * eta_acc;
    chi_acc *= chi_t;
  }
  return eta_acc;
}

XiMap::XiMap(TwistedDerivation eta, Mode mode, std::vector<Scalar> values)
    : eta_(std::move(eta)), mode_(mode), values_(std::move(values)) {}

XiMap XiMap::additive(TwistedDerivation eta, std::vector<Scalar> values) {
  if (values.size() != eta.values().size()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
  return XiMap(std::move(eta), Mode::Additive, std::move(values));
}

XiMap XiMap::jordanian(TwistedDerivation eta) {
  if (!eta.character().is_trivial())
    throw Error(ErrorKind::WrongXiMode, "the Jordanian ξ-map needs χ = ε");
  return XiMap(std::move(eta), Mode::Jordanian, {});
}

XiMap XiMap::jordanian(TwistedDerivation eta, const std::vector<Scalar>& supplied) {
  XiMap xi = jordanian(std::move(eta));
  if (supplied.size() != xi.eta_.values().size()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
  for (std::size_t i = 0; i < supplied.size(); ++i) {
    Scalar expected = xi(unit_vector(supplied.size(), i));
    if (supplied[i] != expected)
      throw Error(ErrorKind::InconsistentXi, "generator " + std::to_string(i) + ": supplied " + to_string(supplied[i]) +
                                                 ", cocycle requires " + to_string(expected));
  }
  return xi;
}

Scalar XiMap::operator()(const Exponents& h) const {
  if (mode_ == Mode::Jordanian) {
    Scalar e = eta_(h);
    return (e * e - e) / 2;
  }
  if (h.size() != values_.size()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
  Scalar out = 0;
  for (std::size_t i = 0; i < h.size(); ++i) out += Scalar(h[i]) * values_[i];
  return out;
}

Scalar XiMap::zeta(const Exponents& h) const { return mode_ == Mode::Jordanian ? eta_(h) : Scalar(0); }

TripleVerdict validate_yd_triple(const YDTriple& t) {
  try {
    t.group.validate();
  } catch (const Error& e) {
    return {TripleKind::Invalid, e.what()};
  }
  if (t.chi.rank() != t.group.rank() || t.eta.values().size() != t.group.rank())
    return {TripleKind::Invalid, "rank mismatch"};
  if (t.eta.character().values() != t.chi.values()) return {TripleKind::Invalid, "η is not a χ-derivation"};
  if (t.eta(t.group.g) != 1) return {TripleKind::Invalid, "η(g) ≠ 1"};
  if (t.chi(t.group.g) != 1) return {TripleKind::NonJordanian, ""};
  return {TripleKind::Jordanian, ""};
}

}  // namespace nchopf
