#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nchopf/error.hpp"
#include "nchopf/group.hpp"

using namespace nchopf;

TEST_CASE("exponent vectors") {
  CHECK(add({1, -2}, {3, 2}) == Exponents{4, 0});
  CHECK(negate({1, -2}) == Exponents{-1, 2});
  CHECK(unit_vector(3, 1) == Exponents{0, 1, 0});
  CHECK(unit_vector(2, 0, -4) == Exponents{-4, 0});
}

TEST_CASE("group spec validation") {
  CHECK_NOTHROW(GroupSpec::cyclic().validate());
  CHECK_THROWS_AS((GroupSpec{{}, {}}.validate()), Error);
  CHECK_THROWS_AS((GroupSpec{{"g", "h"}, {1}}.validate()), Error);
  CHECK_THROWS_AS((GroupSpec{{"g", "h"}, {0, 0}}.validate()), Error);
}

TEST_CASE("characters") {
  Character eps = Character::trivial(2);
  CHECK(eps({5, -3}) == 1);
  CHECK(eps.is_trivial());
  Character chi({Scalar(2)});
  CHECK(chi({3}) == 8);
  CHECK(chi({-1}) == Scalar(1, 2));
  CHECK(chi({0}) == 1);
  CHECK_FALSE(chi.is_trivial());
}

TEST_CASE("twisted derivations") {
  auto eta = TwistedDerivation::additive({Scalar(1)});
  CHECK(eta({0}) == 0);
  CHECK(eta({5}) == 5);
  CHECK(eta({-2}) == -2);
  TwistedDerivation tw(Character({Scalar(2)}), {Scalar(1)});
  // η(x²) = χ(x)η(x) + χ(x)η(x)
  CHECK(tw({2}) == 4);
  CHECK(tw({0}) == 0);

  // Leibniz law η(ht) = χ(h)η(t) + χ(t)η(h) on random samples.
  TwistedDerivation d(Character({Scalar(3), Scalar(-1, 2)}), {Scalar(2, 3), Scalar(-5)});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Exponents h{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4};
    Exponents t{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4};
    CHECK(d(add(h, t)) == d.character()(h) * d(t) + d.character()(t) * d(h));
  }
}

TEST_CASE("xi maps") {
  auto eta = TwistedDerivation::additive({Scalar(1), Scalar(3)});
  XiMap jor = XiMap::jordanian(eta);
  CHECK(jor({0, 0}) == 0);
  CHECK(jor({0, 1}) == 3);  // (9 - 3) / 2
  CHECK(jor.zeta({0, 1}) == 3);
  CHECK(jor({1, 0}) == 0);

  auto eta25 = TwistedDerivation::additive({Scalar(2), Scalar(5)});
  XiMap j2 = XiMap::jordanian(eta25);
  CHECK(j2({1, 0}) == 1);
  CHECK(j2({0, 1}) == 10);
  CHECK(j2({1, 1}) == 21);
  CHECK(j2({1, 1}) - j2({1, 0}) - eta25({1, 0}) * eta25({0, 1}) - j2({0, 1}) == 0);

  XiMap add = XiMap::additive(eta, {Scalar(1, 2), Scalar(-2)});
  CHECK(add.zeta({4, 7}) == 0);
  CHECK(add({2, 1}) == Scalar(1) - 2);

  CHECK_NOTHROW(XiMap::jordanian(eta, {Scalar(0), Scalar(3)}));
  CHECK_THROWS_AS(XiMap::jordanian(eta, {Scalar(0), Scalar(4)}), Error);

  // ξ(hk) = ξ(h) + ζ(h)η(k) + ξ(k) for both modes.
  std::mt19937_64 rng(5);
  for (const XiMap* xi : {&jor, &add}) {
    for (int i = 0; i < 200; ++i) {
      Exponents h{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3};
      Exponents k{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3};
      CHECK((*xi)(nchopf::add(h, k)) == (*xi)(h) + xi->zeta(h) * xi->eta(k) + (*xi)(k));
    }
  }
}

TEST_CASE("yd triple classification") {
  YDTriple minimal{GroupSpec::cyclic(), Character::trivial(1), TwistedDerivation::additive({Scalar(1)})};
  CHECK(validate_yd_triple(minimal).kind == TripleKind::Jordanian);

  YDTriple zero_eta{GroupSpec::cyclic(), Character::trivial(1), TwistedDerivation::additive({Scalar(0)})};
  auto v = validate_yd_triple(zero_eta);
  CHECK(v.kind == TripleKind::Invalid);
  CHECK(v.reason.find("η(g)") != std::string::npos);

  Character chi({Scalar(2)});
  YDTriple twisted{GroupSpec::cyclic(), chi, TwistedDerivation(chi, {Scalar(1)})};
  CHECK(validate_yd_triple(twisted).kind == TripleKind::NonJordanian);

  YDTriple mismatched{GroupSpec{{"g", "h"}, {1, 0}}, Character::trivial(1), TwistedDerivation::additive({Scalar(1)})};
  CHECK(validate_yd_triple(mismatched).kind == TripleKind::Invalid);
}
