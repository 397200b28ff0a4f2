#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "nchopf/alphabet.hpp"
#include "nchopf/polynomial.hpp"

namespace nchopf {

/// Rank-N tensor of words with rational coefficients: a finite map
/// (Word, ..., Word) -> Scalar without zero entries.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Word, N>;
  struct Entry {
    Key key;
    Scalar coeff;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Tensor() = default;

  static Tensor from_entries(std::vector<Entry> entries) {
    Tensor t;
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return key_less(a.key, b.key); });
    for (auto& e : entries) {
      if (!t.entries_.empty() && t.entries_.back().key == e.key) {
        t.entries_.back().coeff += e.coeff;
        if (nchopf::is_zero(t.entries_.back().coeff)) t.entries_.pop_back();
      } else if (!nchopf::is_zero(e.coeff)) {
        t.entries_.push_back(std::move(e));
      }
    }
    return t;
  }

  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  Tensor& operator+=(const Tensor& o) {
    std::vector<Entry> all = entries_;
    all.insert(all.end(), o.entries_.begin(), o.entries_.end());
    *this = from_entries(std::move(all));
    return *this;
  }
  Tensor& operator-=(const Tensor& o) { return *this += o * Scalar(-1); }
  Tensor& operator*=(const Scalar& c) {
    if (nchopf::is_zero(c)) {
      entries_.clear();
    } else {
      for (auto& e : entries_) e.coeff *= c;
    }
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& c) { return a *= c; }

  /// Componentwise product (A⊗...⊗A is an algebra).
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    std::vector<Entry> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.entries_)
      for (const auto& y : b.entries_) {
        Entry e;
        for (std::size_t i = 0; i < N; ++i) e.key[i] = x.key[i] + y.key[i];
        e.coeff = x.coeff * y.coeff;
        out.push_back(std::move(e));
      }
    return from_entries(std::move(out));
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  static bool key_less(const Key& a, const Key& b) {
    ShortLex less;
    for (std::size_t i = 0; i < N; ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return false;
  }

  std::vector<Entry> entries_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

/// p ⊗ q.
Tensor2 tensor(const Polynomial& p, const Polynomial& q);

/// Applies a linear map to one leg of a tensor, producing a tensor of rank N+1
/// when `f` returns Tensor2 (coproduct on a leg) or rank N when it returns a
/// Polynomial.
template <std::size_t N, typename F>
Tensor<N> map_leg(const Tensor<N>& t, std::size_t leg, F&& f) {
  std::vector<typename Tensor<N>::Entry> out;
  for (const auto& e : t) {
    Polynomial image = f(e.key[leg]);
    for (const auto& term : image) {
      typename Tensor<N>::Entry ne{e.key, e.coeff * term.coeff};
      ne.key[leg] = term.word;
      out.push_back(std::move(ne));
    }
  }
  return Tensor<N>::from_entries(std::move(out));
}

/// Multiplies the two legs together: m(Σ x⊗y) = Σ xy.
Polynomial multiply_legs(const Tensor2& t);

std::string render(const Tensor2& t, const Alphabet& alphabet);
std::string render(const Tensor3& t, const Alphabet& alphabet);

}  // namespace nchopf
