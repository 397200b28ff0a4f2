#include "nchopf/polynomial.hpp"

#include <algorithm>

#include "nchopf/order.hpp"

namespace nchopf {

namespace {

bool term_less(const Term& a, const Term& b) { return ShortLex{}(a.word, b.word); }

// Merges two sorted term lists, scaling the second by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  ShortLex less;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && less(a[i].word, b[j].word))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || less(b[j].word, a[i].word)) {
      out.push_back({b[j].word, sign > 0 ? Scalar(b[j].coeff) : Scalar(-b[j].coeff)});
      ++j;
    } else {
      Scalar c = sign > 0 ? Scalar(a[i].coeff + b[j].coeff) : Scalar(a[i].coeff - b[j].coeff);
      if (!is_zero(c)) out.push_back({a[i].word, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const Scalar& c) { return of(Word(), c); }

Polynomial Polynomial::of(Word w, const Scalar& c) {
  Polynomial p;
  if (!nchopf::is_zero(c)) p.terms_.push_back({std::move(w), c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().word == t.word) {
      p.terms_.back().coeff += t.coeff;
      if (nchopf::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!nchopf::is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  // ShortLex puts the longest words last.
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().word.size());
}

Scalar Polynomial::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return ShortLex{}(t.word, x); });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  terms_ = merge(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  terms_ = merge(terms_, q.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (nchopf::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  std::vector<Term> out;
  out.reserve(p.size() * q.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) out.push_back({a.word + b.word, a.coeff * b.coeff});
  return Polynomial::from_terms(std::move(out));
}

Polynomial power(const Polynomial& p, unsigned e) {
  Polynomial out = Polynomial::one();
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

namespace {

template <typename Greater>
std::string render_sorted(const Polynomial& p, const Alphabet& alphabet, Greater greater) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> terms;
  for (const auto& t : p) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](const Term* a, const Term* b) { return greater(a->word, b->word); });
  std::string out;
  bool first = true;
  for (const Term* t : terms) {
    Scalar c = t->coeff;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    if (t->word.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + " ";
      out += alphabet.render(t->word);
    }
  }
  return out;
}

}  // namespace

std::string render(const Polynomial& p, const Alphabet& alphabet, const MonomialOrder& order) {
  return render_sorted(p, alphabet, [&](const Word& a, const Word& b) { return order.less(b, a); });
}

std::string render(const Polynomial& p, const Alphabet& alphabet) {
  return render_sorted(p, alphabet, [](const Word& a, const Word& b) { return ShortLex{}(b, a); });
}

}  // namespace nchopf
