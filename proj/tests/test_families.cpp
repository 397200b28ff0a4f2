#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nchopf/error.hpp"
#include "nchopf/families.hpp"
#include "nchopf/hopfcheck.hpp"

using namespace nchopf;

namespace {

Polynomial P(const QuotientContext& q, std::string_view s, const Scalar& c = 1) {
  return Polynomial::of(q.alphabet().word(s), c);
}

YDTriple z2(const Scalar& eta_h) {
  return YDTriple{GroupSpec{{"g", "h"}, {1, 0}}, Character::trivial(2), TwistedDerivation::additive({1, eta_h})};
}

std::set<std::string> rendered_rules(const QuotientContext& q) {
  std::set<std::string> out;
  for (const auto& r : q.system.rules())
    out.insert(q.alphabet().render(r.lead) + " -> " + q.render(r.rhs));
  return out;
}

}  // namespace

TEST_CASE("free lifting") {
  auto p = make_wujor();
  CHECK(p.relations.size() == 6);
  auto q = QuotientContext::build(p);
  CHECK(q.nf(P(q, "g a1 g_inv")) == P(q, "a1") + Polynomial::one() - P(q, "g"));
  CHECK(q.nf(P(q, "g a2 g_inv")) - P(q, "a2") == P(q, "a1"));
  CHECK(q.nf(P(q, "g_inv g")) == Polynomial::one());
  REQUIRE(p.basis);
  CHECK(p.basis->letters.size() == 2);
  CHECK(p.group_word({-2}) == p.alphabet->word("g_inv g_inv"));
  CHECK(p.group_word({0}).empty());
}

TEST_CASE("u_lambda") {
  auto q = QuotientContext::build(make_ujor_lambda(0));
  CHECK(q.nf(P(q, "a1 a2") - P(q, "a2 a1")) == P(q, "a1 a1", Scalar(1, 2)) - P(q, "a2") - P(q, "a1", Scalar(1, 2)));
  for (const Scalar& lambda : {Scalar(0), Scalar(-1, 32), Scalar(7, 3)}) {
    auto p = make_ujor_lambda(lambda);
    CHECK(counit_eval(p.relations.back(), *p.alphabet) == 0);
    REQUIRE(p.param("lambda"));
    CHECK(*p.param("lambda") == lambda);
  }
}

TEST_CASE("additive deformation U_xi") {
  const Scalar q = 3, r = Scalar(-2, 5), lambda = Scalar(1, 2);
  auto tri = z2(q);
  auto ctx = QuotientContext::build(make_U_xi(tri, XiMap::additive(tri.eta, {Scalar(0), r}), lambda));
  // h a2 h^-1 = a2 + q a1 + r(1 - g)
  CHECK(ctx.nf(P(ctx, "h a2 h_inv")) == P(ctx, "a2") + P(ctx, "a1", q) + (Polynomial::one() - P(ctx, "g")) * r);
  CHECK(ctx.nf(P(ctx, "h a1 h_inv")) == P(ctx, "a1"));
  CHECK(ctx.nf(P(ctx, "g h g_inv h_inv")) == Polynomial::one());
  // g a2 g^-1 carries ξ(g)(1 - g) when ξ(g) != 0.
  auto c2 = QuotientContext::build(make_U_xi(tri, XiMap::additive(tri.eta, {Scalar(5), r}), lambda));
  CHECK(c2.nf(P(c2, "g a2 g_inv")) == P(c2, "a2") + P(c2, "a1") + (Polynomial::one() - P(c2, "g")) * Scalar(5));

  // ξ = 0 drops every (1 - g) term from the conjugation.
  auto c0 = QuotientContext::build(make_U_xi(tri, XiMap::additive(tri.eta, {Scalar(0), Scalar(0)}), lambda));
  CHECK(c0.nf(P(c0, "h a2 h_inv")) == P(c0, "a2") + P(c0, "a1", q));

  CHECK_THROWS_AS(make_U_xi(tri, XiMap::jordanian(tri.eta), lambda), Error);
  YDTriple bad{GroupSpec::cyclic(), Character::trivial(1), TwistedDerivation::additive({Scalar(2)})};
  CHECK_THROWS_AS(make_U_xi(bad, XiMap::additive(bad.eta, {Scalar(0)}), lambda), Error);
  Character chi({Scalar(2)});
  YDTriple twisted{GroupSpec::cyclic(), chi, TwistedDerivation(chi, {Scalar(1)})};
  CHECK_THROWS_AS(make_U_xi(twisted, XiMap::additive(TwistedDerivation::additive({Scalar(1)}), {Scalar(0)}), lambda),
                  Error);
}

TEST_CASE("jordanian family u(D)") {
  auto ctx = QuotientContext::build(make_ujor_D(z2(3)));
  // ξ(h) = (9 - 3)/2 = 3
  CHECK(ctx.nf(P(ctx, "h a2 h_inv")) ==
        P(ctx, "a2") + P(ctx, "a1", 3) + (Polynomial::one() - P(ctx, "g")) * Scalar(3));
  CHECK(ctx.nf(P(ctx, "h a1 h_inv")) == P(ctx, "a1") + (Polynomial::one() - P(ctx, "g")) * Scalar(3));
  CHECK(ctx.presentation.params.empty());

  // Over Z the family is u itself.
  auto overZ =
      QuotientContext::build(make_ujor_D({GroupSpec::cyclic(), Character::trivial(1), TwistedDerivation::additive({1})}));
  auto u = QuotientContext::build(make_ujor_lambda(0));
  CHECK(rendered_rules(overZ) == rendered_rules(u));

  YDTriple bad{GroupSpec::cyclic(), Character::trivial(1), TwistedDerivation::additive({Scalar(0)})};
  CHECK_THROWS_AS(make_ujor_D(bad), Error);
}

TEST_CASE("ohn algebra") {
  auto q = QuotientContext::build(make_ohn(1));
  CHECK(q.nf(P(q, "K T") - P(q, "T K")) == P(q, "T T") - Polynomial::one());
  CHECK(q.nf(P(q, "T T_inv")) == Polynomial::one());
  // g·x = x + 2(1 - g) with g = T^-2, x = K T^-1.
  CHECK(q.nf(P(q, "T_inv T_inv K T_inv T T")) ==
        q.nf(P(q, "K T_inv") + Polynomial::constant(2) - P(q, "T_inv T_inv", 2)));
  CHECK_THROWS_AS(make_ohn(0), Error);
}

TEST_CASE("example with indecomposable skew-primitives") {
  auto q = QuotientContext::build(make_example_indecomposable());
  CHECK(q.nf(P(q, "gamma a gamma_inv")) == P(q, "a") + Polynomial::one() - P(q, "gamma"));
  CHECK(adjoint_matrix(q.alphabet().word("gamma"), q) == Matrix{{1, 1}, {0, 1}});
}

TEST_CASE("jordan plane") {
  auto q = QuotientContext::build(make_jordan_plane());
  CHECK(q.nf(P(q, "x2 x1")) == P(q, "x1 x2") - P(q, "x1 x1", Scalar(1, 2)));
}

TEST_CASE("ore towers") {
  SUBCASE("u") {
    auto q = QuotientContext::build(make_ujor_lambda(0));
    auto report = verify_ore_tower(ore_tower_u(q.presentation), q.system, q.certificate);
    CHECK(report.ok);
    // The commutation identities, checked directly.
    CHECK(q.nf(P(q, "a2 a1") - P(q, "a1 a2") - P(q, "a2") - P(q, "a1", Scalar(1, 2)) + P(q, "a1 a1", Scalar(1, 2)))
              .is_zero());
    CHECK(q.nf(P(q, "a1 g") - P(q, "g a1") - P(q, "g g") + P(q, "g")).is_zero());
  }
  SUBCASE("u with a wrong derivation") {
    auto q = QuotientContext::build(make_ujor_lambda(0));
    OreTower t = ore_tower_u(q.presentation);
    const Alphabet& a = *t.alphabet;
    t.levels[0].delta[a.at("g")] = Polynomial::of(a.word("g g"));
    CHECK_FALSE(verify_ore_tower(t, q.system, q.certificate).ok);
  }
  SUBCASE("ohn") {
    for (const Scalar& hbar : {Scalar(1), Scalar(2), Scalar(-1, 3)}) {
      auto q = QuotientContext::build(make_ohn(hbar));
      auto report = verify_ore_tower(ore_tower_ohn(q.presentation, hbar), q.system, q.certificate);
      INFO(to_string(hbar));
      CHECK(report.ok);
    }
  }
  SUBCASE("ohn tower at the wrong parameter") {
    auto q = QuotientContext::build(make_ohn(1));
    CHECK_FALSE(verify_ore_tower(ore_tower_ohn(q.presentation, 2), q.system, q.certificate).ok);
  }
  SUBCASE("certificate too short") {
    auto p = make_ujor_lambda(0);
    auto sys = p.rewrite_system();
    ConfluenceCertificate weak;
    CHECK_THROWS_AS(verify_ore_tower(ore_tower_u(p), sys, weak), Error);
  }
}
