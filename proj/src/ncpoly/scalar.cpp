#include "nchopf/scalar.hpp"

#include <cctype>

#include "nchopf/error.hpp"

namespace nchopf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Scalar s(n, d);
  s.canonicalize();
  return negative ? Scalar(-s) : s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar pow(const Scalar& s, long e) {
  if (e < 0) {
    if (is_zero(s)) throw Error(ErrorKind::InvalidArgument, "negative power of zero");
    return Scalar(1) / pow(s, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), s.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), s.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Scalar(n, d);
}

}  // namespace nchopf
