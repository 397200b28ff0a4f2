#pragma once

#include <string>
#include <vector>

#include "nchopf/scalar.hpp"

namespace nchopf {

/// Element of the free abelian group Z^n as an exponent vector.
using Exponents = std::vector<long>;

Exponents add(const Exponents& h, const Exponents& k);
Exponents negate(const Exponents& h);
Exponents unit_vector(std::size_t rank, std::size_t i, long e = 1);

/// Z^n with named generators and a distinguished nonzero element g.
struct GroupSpec {
  std::vector<std::string> generators;
  Exponents g;

  std::size_t rank() const { return generators.size(); }
  /// Throws InvalidArgument unless rank >= 1, |g| = rank and g != 0.
  void validate() const;

  static GroupSpec cyclic(std::string name = "g");
};

/// Group homomorphism Z^n -> k^x given by its values on the generators.
class Character {
 public:
  explicit Character(std::vector<Scalar> values);
  static Character trivial(std::size_t rank) { return Character(std::vector<Scalar>(rank, Scalar(1))); }

  Scalar operator()(const Exponents& h) const;
  const std::vector<Scalar>& values() const noexcept { return values_; }
  bool is_trivial() const;
  std::size_t rank() const noexcept { return values_.size(); }

 private:
  std::vector<Scalar> values_;
};

inline Scalar eval_character(const Character& chi, const Exponents& h) { return chi(h); }

/// η with η(ht) = χ(h)η(t) + χ(t)η(h), determined by its generator values.
class TwistedDerivation {
 public:
  TwistedDerivation(Character chi, std::vector<Scalar> values);
  /// χ = ε, so η is additive.
  static TwistedDerivation additive(std::vector<Scalar> values);

  Scalar operator()(const Exponents& h) const;
  const Character& character() const noexcept { return chi_; }
  const std::vector<Scalar>& values() const noexcept { return values_; }

 private:
  Character chi_;
  std::vector<Scalar> values_;
};

inline Scalar eval_derivation(const TwistedDerivation& eta, const Exponents& h) { return eta(h); }

/// The (1,3) entry of the adjoint action matrix, with the degree-two law
///   ξ(hk) = ξ(h) + ζ(h)η(k) + ξ(k).
/// Additive: ζ = 0 and ξ is additive with the given generator values.
/// Jordanian: ζ = η and ξ(h) = (η(h)² - η(h)) / 2.
class XiMap {
 public:
  enum class Mode { Additive, Jordanian };

  static XiMap additive(TwistedDerivation eta, std::vector<Scalar> values);
  static XiMap jordanian(TwistedDerivation eta);
  /// Throws InconsistentXi when `supplied` disagrees with the closed form.
  static XiMap jordanian(TwistedDerivation eta, const std::vector<Scalar>& supplied);

  Scalar operator()(const Exponents& h) const;
  Scalar zeta(const Exponents& h) const;
  Scalar eta(const Exponents& h) const { return eta_(h); }
  Mode mode() const noexcept { return mode_; }
  const TwistedDerivation& derivation() const noexcept { return eta_; }

 private:
  XiMap(TwistedDerivation eta, Mode mode, std::vector<Scalar> values);

  TwistedDerivation eta_;
  Mode mode_;
  std::vector<Scalar> values_;
};

inline Scalar eval_xi(const XiMap& xi, const Exponents& h) { return xi(h); }

struct YDTriple {
  GroupSpec group;
  Character chi;
  TwistedDerivation eta;
};

enum class TripleKind { Jordanian, NonJordanian, Invalid };

struct TripleVerdict {
  TripleKind kind;
  std::string reason;
};

/// Invalid iff η(g) != 1 (or the data are ill-shaped); Jordanian iff also
/// χ(g) = 1.
TripleVerdict validate_yd_triple(const YDTriple& triple);

}  // namespace nchopf
