#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nchopf/alphabet.hpp"
#include "nchopf/scalar.hpp"

namespace nchopf {

class MonomialOrder;

struct Term {
  Word word;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of a free algebra: a finite map Word -> Scalar with no zero
/// coefficients. Terms are kept in ShortLex order, so equality is plain
/// vector equality.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Scalar& c);
  static Polynomial one() { return constant(1); }
  static Polynomial of(Word w, const Scalar& c = 1);
  /// Sorts, merges equal words and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Length of the longest word; -1 for the zero polynomial.
  int degree() const;
  Scalar coeff(const Word& w) const;

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= Scalar(-1); }
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Noncommutative product (concatenation, extended bilinearly).
inline Polynomial nc_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Integer power by repeated multiplication.
Polynomial power(const Polynomial& p, unsigned e);

/// Canonical text: terms sorted descending under `order`, letters separated
/// by spaces, coefficients as p/q, "0" for the zero polynomial.
std::string render(const Polynomial& p, const Alphabet& alphabet, const MonomialOrder& order);
/// Same, with descending ShortLex as the term order.
std::string render(const Polynomial& p, const Alphabet& alphabet);

}  // namespace nchopf
