#pragma once

#include <optional>
#include <vector>

#include "nchopf/alphabet.hpp"
#include "nchopf/polynomial.hpp"
#include "nchopf/tensor.hpp"

namespace nchopf {

/// Assignment letter -> polynomial, extended to the unique algebra
/// homomorphism. Images may live over a different alphabet than the source.
class Substitution {
 public:
  explicit Substitution(std::size_t source_size = 0) : images_(source_size) {}

  /// Identity assignment on an alphabet of the given size.
  static Substitution identity(std::size_t size);

  Substitution& set(LetterId letter, Polynomial image);
  const std::optional<Polynomial>& image(LetterId letter) const;
  std::size_t source_size() const noexcept { return images_.size(); }

  /// Throws Error(MissingImage) when a letter of p has no image.
  Polynomial apply(const Polynomial& p) const;
  Polynomial apply(const Word& w) const;

 private:
  std::vector<std::optional<Polynomial>> images_;
};

inline Polynomial nc_substitute(const Polynomial& p, const Substitution& phi) { return phi.apply(p); }

// Free-algebra Hopf structure maps determined by the letter roles:
//   group-like g:            Δ(g) = g⊗g,        ε(g) = 1, S(g) = g⁻¹
//   skew-primitive a ∈ P_{l,r}: Δ(a) = a⊗r + l⊗a, ε(a) = 0, S(a) = -l⁻¹ a r⁻¹
// Δ and ε extend multiplicatively, S anti-multiplicatively. Plain letters
// have no role and raise MissingRole.

Tensor2 free_coproduct(const Polynomial& p, const Alphabet& alphabet);
Tensor2 free_coproduct(const Word& w, const Alphabet& alphabet);
Scalar counit_eval(const Polynomial& p, const Alphabet& alphabet);
Scalar counit_eval(const Word& w, const Alphabet& alphabet);
Polynomial antipode_apply(const Polynomial& p, const Alphabet& alphabet);

/// (Δ⊗id)(t) and (id⊗Δ)(t).
Tensor3 coproduct_left(const Tensor2& t, const Alphabet& alphabet);
Tensor3 coproduct_right(const Tensor2& t, const Alphabet& alphabet);

/// (ε⊗id)(t) and (id⊗ε)(t).
Polynomial counit_left(const Tensor2& t, const Alphabet& alphabet);
Polynomial counit_right(const Tensor2& t, const Alphabet& alphabet);

}  // namespace nchopf
