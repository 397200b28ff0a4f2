#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "nchopf/error.hpp"
#include "nchopf/expr.hpp"
#include "nchopf/families.hpp"
#include "nchopf/hopfcheck.hpp"
#include "nchopf/presentation_file.hpp"
#include "nchopf/report.hpp"

using namespace nchopf;

namespace {

AlphabetPtr letters() {
  auto a = std::make_shared<Alphabet>();
  LetterId g = a->add_group("g");
  a->add_inverse("g_inv", g);
  a->add_skew("a1", Word::letter(g), Word());
  a->add_skew("a2", Word::letter(g), Word());
  return a;
}

Polynomial W(const Alphabet& a, std::string_view s, const Scalar& c = 1) { return Polynomial::of(a.word(s), c); }

// Position of a parse failure, or {0, 0} when parsing succeeds.
std::pair<int, int> error_at(std::string_view text, const Alphabet& a) {
  try {
    parse_expression(text, a);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

std::pair<int, int> file_error_at(std::string_view text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

const char* kRawU = R"(# u with lambda = 0
[generators]
g : group
g_inv : inverse g
a1 : skew g 1
a2 : skew g 1

[precedence]
g > g_inv > a2 > a1

[relations]
g a1 = a1 g + g - g^2
g a2 = a2 g + a1 g
g_inv a1 = a1 g_inv - g_inv + 1
g_inv a2 = a2 g_inv - g_inv a1
a1 a2 - a2 a1 - 1/2 a1^2 + a2 + 1/2 a1
)";

}  // namespace

TEST_CASE("expression precedence") {
  auto ap = letters();
  const Alphabet& a = *ap;
  CHECK(parse_expression("1", a) == Polynomial::one());
  CHECK(parse_expression("a1*a2", a) == W(a, "a1 a2"));
  CHECK(parse_expression("a1 a2", a) == W(a, "a1 a2"));
  CHECK(parse_expression("g^3", a) == W(a, "g g g"));
  CHECK(parse_expression("g^0", a) == Polynomial::one());
  CHECK(parse_expression("2 a1^2", a) == W(a, "a1 a1", 2));
  CHECK(parse_expression("-a1 + a2", a) == W(a, "a2") - W(a, "a1"));
  CHECK(parse_expression("-a1 a2", a) == -W(a, "a1 a2"));
  CHECK(parse_expression("a1 - a2 - g", a) == W(a, "a1") - W(a, "a2") - W(a, "g"));
  CHECK(parse_expression("(a1 + g)(a1 - g)", a) == W(a, "a1 a1") - W(a, "a1 g") + W(a, "g a1") - W(a, "g g"));
  CHECK(parse_expression("1/2 a1 - 3/4", a) == W(a, "a1", Scalar(1, 2)) - Polynomial::constant(Scalar(3, 4)));
  CHECK(parse_expression("- - a1", a) == W(a, "a1"));
  CHECK(parse_expression("09/010 a1", a) == W(a, "a1", Scalar(9, 10)));
  CHECK(parse_expression("lambda (1 - g^2)", a, {{"lambda", Scalar(2, 3)}}) ==
        (Polynomial::one() - W(a, "g g")) * Scalar(2, 3));
}

TEST_CASE("expression errors carry columns") {
  auto ap = letters();
  const Alphabet& a = *ap;
  CHECK(error_at("a1 + ", a) == std::pair{1, 6});
  CHECK(error_at("(a1", a) == std::pair{1, 4});
  CHECK(error_at("a1 $ a2", a) == std::pair{1, 4});
  CHECK(error_at("q", a) == std::pair{1, 1});
  CHECK(error_at("a1a2", a) == std::pair{1, 1});
  CHECK(error_at("g^-1", a).first == 1);
  CHECK(error_at("(a1)^2", a).first == 1);
  CHECK(error_at("1/0", a).first == 1);
  CHECK(error_at("g^99999", a).first == 1);
  CHECK(error_at("", a) == std::pair{1, 1});
  try {
    parse_expression("zz", a);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::UnknownLetter);
  }
}

TEST_CASE("deep nesting is rejected, not overflowed") {
  auto ap = letters();
  std::string deep(100000, '(');
  CHECK_THROWS_AS(parse_expression(deep + "a1", *ap), ParseError);
  std::string minus(100000, '-');
  CHECK_THROWS_AS(parse_expression(minus + "a1", *ap), ParseError);
  std::string ok = std::string(50, '(') + "a1" + std::string(50, ')');
  CHECK(parse_expression(ok, *ap) == W(*ap, "a1"));
}

TEST_CASE("parser fuzz") {
  auto ap = letters();
  std::mt19937_64 rng(17);
  const std::string alphabet = "ag12_inv ()+-*/^0123456789$\n\t#[]=";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    for (std::size_t k = 0, n = rng() % 24; k < n; ++k)
      s += (rng() % 4 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    try {
      parse_expression(s, *ap);
    } catch (const Error&) {
    }
    try {
      parse_presentation(s);
    } catch (const Error&) {
    }
  }
  CHECK(true);
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(23);
  for (const auto& p : {make_wujor(), make_ohn(1), make_example_indecomposable(), make_jordan_plane()}) {
    const Alphabet& a = *p.alphabet;
    for (int i = 0; i < 200; ++i) {
      Polynomial poly;
      for (std::size_t t = 0, n = rng() % 4; t < n; ++t) {
        Word w;
        for (std::size_t k = 0, len = rng() % 5; k < len; ++k) w += Word::letter(static_cast<LetterId>(rng() % a.size()));
        Scalar c = Scalar(static_cast<long>(rng() % 19) - 9) / Scalar(static_cast<long>(1 + rng() % 6));
        poly += Polynomial::of(w, c);
      }
      std::string text = render(poly, a, p.order);
      INFO(text);
      CHECK(parse_expression(text, a) == poly);
      CHECK(parse_expression(render(poly, a), a) == poly);
    }
  }
}

TEST_CASE("raw presentation files") {
  auto p = parse_presentation(kRawU);
  CHECK(p.alphabet->size() == 4);
  CHECK(p.relations.size() == 7);  // five listed plus g g_inv = g_inv g = 1
  auto q = QuotientContext::build(p);
  auto u = QuotientContext::build(make_ujor_lambda(0));
  CHECK(q.system.rules().size() == u.system.rules().size());
  for (const auto& r : u.system.rules())
    CHECK(q.nf(parse_expression(render(r.relation(), u.alphabet()), q.alphabet())).is_zero());
  CHECK(q.render(q.nf(parse_expression("a2*a1", q.alphabet()))) == "a1 a2 - 1/2 a1 a1 + a2 + 1/2 a1");
}

TEST_CASE("group-mode presentation files") {
  auto jor = parse_presentation(R"([group]
generators = g h
g = 1 0
[eta]
values = 1 3
[xi]
mode = jordanian
)");
  auto ctx = QuotientContext::build(jor);
  CHECK(adjoint_matrix(ctx.alphabet().word("h"), ctx) == Matrix{{1, 3, 3}, {0, 1, 3}, {0, 0, 1}});

  auto add = parse_presentation(R"([group]
generators = g h
g = 1 0
[eta]
values = 1 2
[xi]
mode = additive
values = 0 1/2
[params]
lambda = 1
)");
  auto ca = QuotientContext::build(add);
  CHECK(adjoint_matrix(ca.alphabet().word("h"), ca) == Matrix{{1, 0, Scalar(1, 2)}, {0, 1, 2}, {0, 0, 1}});
  REQUIRE(add.param("lambda"));
  CHECK(*add.param("lambda") == 1);

  auto fr = parse_presentation(R"([group]
generators = g h
g = 1 0
[eta]
values = 1 3
[xi]
mode = free
values = 0 7
)");
  auto cf = QuotientContext::build(fr);
  CHECK(adjoint_matrix(cf.alphabet().word("h"), cf) == Matrix{{1, 3, 7}, {0, 1, 3}, {0, 0, 1}});

  // Supplied Jordanian values must match (η² - η)/2.
  CHECK_THROWS_AS(parse_presentation("[group]\ngenerators = g h\ng = 1 0\n[eta]\nvalues = 1 3\n[xi]\nmode = jordanian\n"
                                     "values = 0 4\n"),
                  Error);
}

TEST_CASE("presentation file errors") {
  CHECK(file_error_at("[nonsense]\n") == std::pair{1, 2});
  CHECK(file_error_at("x = 1\n") == std::pair{1, 1});
  CHECK(file_error_at("[generators]\nx : plain\n[generators]\n").first == 3);
  CHECK(file_error_at("[generators]\nx : plain\n[precedence]\nx\n[relations]\nx + $\n") == std::pair{6, 5});
  CHECK(file_error_at("[generators]\nx : plain\n[precedence]\nx\n[relations]\nx - x\n").first == 6);
  CHECK(file_error_at("[generators]\nx : plain\ny : plain\n[precedence]\nx\n[relations]\nx y\n").first == 5);
  CHECK(file_error_at("[generators]\ng : group\n[precedence]\ng\n[relations]\ng g\n").first == 1);
  CHECK(file_error_at("[generators]\nx : plain\n[precedence]\nx\n[relations]\nx = q\n") == std::pair{6, 5});
  CHECK(file_error_at("[group]\ngenerators = g\ng = 1\ncolour = red\n").first == 4);
  CHECK(file_error_at("[generators]\nx : wobbly\n").first == 2);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
}

TEST_CASE("named families and files") {
  CHECK(named_presentation("ujor_lambda", {{"lambda", Scalar(1, 3)}}).param("lambda"));
  CHECK_THROWS_AS(named_presentation("ohn", {{"hbar", Scalar(0)}}), Error);
  CHECK_THROWS_AS(named_presentation("nope"), Error);
  CHECK_THROWS_AS(named_presentation("wujor", {{"lambda", Scalar(1)}}), Error);
  CHECK_THROWS_AS(load_presentation("/nonexistent/file.pres"), Error);
  for (const char* name : {"u", "wujor", "ohn", "example", "jordan_plane", "ujor_D_z2", "U_xi_z2"}) {
    auto p = load_presentation(std::string(NCHOPF_DATA_DIR) + "/" + name + ".pres");
    auto q = QuotientContext::build(p);
    INFO(name);
    CHECK(q.certificate.closed);
  }
  auto ohn = QuotientContext::build(load_presentation(std::string(NCHOPF_DATA_DIR) + "/ohn.pres"));
  auto ref = QuotientContext::build(make_ohn(1));
  for (const auto& r : ref.presentation.relations)
    CHECK(ohn.nf(parse_expression(render(r, ref.alphabet()), ohn.alphabet())).is_zero());
}

TEST_CASE("report serialisation") {
  Report r;
  r.checks.push_back({"c1.a", 1, "first", {{"x", "1/2"}}, CheckStatus::Pass, "", 1.23456});
  r.checks.push_back({"c2.b", 2, "second", {}, CheckStatus::Fail, "witness text", 2.0});
  r.checks.push_back({"c3.c", 3, "third", {}, CheckStatus::Error, "boom", 0.5});
  CHECK_FALSE(r.ok());
  auto j = nlohmann::json::parse(to_json(r));
  REQUIRE(j["checks"].size() == 3);
  CHECK(j["checks"][0]["id"] == "c1.a");
  CHECK(j["checks"][0]["params"]["x"] == "1/2");
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK(j["checks"][1]["witness"] == "witness text");
  CHECK(j["checks"][2]["status"] == "error");
  CHECK(j["summary"]["total"] == 3);
  CHECK(j["summary"]["passed"] == 1);
  CHECK(j["summary"]["failed"] == 1);
  CHECK(j["summary"]["errors"] == 1);

  // Field order is fixed.
  std::string text = to_json(r, false);
  CHECK(text.find("\"id\"") < text.find("\"anchor\""));
  CHECK(text.find("\"anchor\"") < text.find("\"params\""));
  CHECK(text.find("\"params\"") < text.find("\"status\""));
  CHECK(text.find("\"checks\"") < text.find("\"summary\""));
  CHECK(nlohmann::json::parse(text)["checks"][0]["ms"] == 0.0);

  auto txt = to_text(r);
  CHECK(txt.find("FAIL  c2.b") != std::string::npos);
  CHECK(txt.find("1/3 checks passed, 1 failed, 1 errors") != std::string::npos);
}
