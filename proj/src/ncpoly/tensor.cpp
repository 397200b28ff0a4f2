#include "nchopf/tensor.hpp"

namespace nchopf {

Tensor2 tensor(const Polynomial& p, const Polynomial& q) {
  std::vector<Tensor2::Entry> out;
  out.reserve(p.size() * q.size());
  for (const auto& a : p)
    for (const auto& b : q) out.push_back({{a.word, b.word}, a.coeff * b.coeff});
  return Tensor2::from_entries(std::move(out));
}

Polynomial multiply_legs(const Tensor2& t) {
  std::vector<Term> out;
  out.reserve(t.size());
  for (const auto& e : t) out.push_back({e.key[0] + e.key[1], e.coeff});
  return Polynomial::from_terms(std::move(out));
}

namespace {

template <std::size_t N>
std::string render_tensor(const Tensor<N>& t, const Alphabet& alphabet) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& e : t) {
    Scalar c = e.coeff;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    if (c != 1) out += to_string(c) + " ";
    out += "(";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) out += " ⊗ ";
      out += alphabet.render(e.key[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace

std::string render(const Tensor2& t, const Alphabet& alphabet) { return render_tensor(t, alphabet); }
std::string render(const Tensor3& t, const Alphabet& alphabet) { return render_tensor(t, alphabet); }

}  // namespace nchopf
