#include "nchopf/expr.hpp"

#include <cctype>

#include "nchopf/error.hpp"

namespace nchopf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet, const ParamTable& params, int line, int offset)
      : text_(text), alphabet_(alphabet), params_(params), line_(line), offset_(offset) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message, ErrorKind kind = ErrorKind::ParseError) const {
    fail_at(pos_, message, kind);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message,
                            ErrorKind kind = ErrorKind::ParseError) const {
    throw ParseError(line_, offset_ + static_cast<int>(pos) + 1, message, kind);
  }

  static constexpr int kMaxDepth = 256;

  struct Nest {
    explicit Nest(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) parser.fail("expression nested too deeply");
    }
    ~Nest() { --parser.depth_; }
    Parser& parser;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool starts_power() {
    skip_space();
    char c = peek();
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial sum() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  Polynomial term() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      Nest guard(*this);
      return -term();
    }
    return product();
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_power()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    skip_space();
    bool is_identifier = ident_start(peek());
    Polynomial base = atom();
    skip_space();
    if (peek() != '^') return base;
    if (!is_identifier) fail("'^' applies only to a single identifier");
    ++pos_;
    skip_space();
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (digits == pos_) fail("expected a nonnegative integer exponent");
    std::string_view e = text_.substr(digits, pos_ - digits);
    if (e.size() > 4) fail_at(digits, "exponent too large");
    return nchopf::power(base, static_cast<unsigned>(std::stoul(std::string(e))));
  }

  Polynomial atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Nest guard(*this);
      Polynomial inner = sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (ident_start(c)) return identifier();
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (d == pos_) fail("expected denominator");
      den.assign(text_.substr(d, pos_ - d));
      if (mpz_class(den, 10) == 0) fail_at(d, "zero denominator");
    }
    Scalar value{mpz_class(num, 10), mpz_class(den, 10)};
    value.canonicalize();
    return Polynomial::constant(value);
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    while (ident_char(peek())) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (auto id = alphabet_.find(name)) return Polynomial::of(Word::letter(*id));
    if (auto it = params_.find(name); it != params_.end()) return Polynomial::constant(it->second);
    fail_at(start, "unknown letter '" + std::string(name) + "'", ErrorKind::UnknownLetter);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  const ParamTable& params_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const Alphabet& alphabet, const ParamTable& params, int line,
                            int column_offset) {
  return Parser(text, alphabet, params, line, column_offset).parse();
}

}  // namespace nchopf
