#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nchopf/error.hpp"
#include "nchopf/families.hpp"
#include "nchopf/hopf_ops.hpp"
#include "nchopf/linalg.hpp"
#include "nchopf/polynomial.hpp"
#include "nchopf/tensor.hpp"

using namespace nchopf;

namespace {

AlphabetPtr ujor_alphabet() {
  auto a = std::make_shared<Alphabet>();
  LetterId g = a->add_group("g");
  a->add_inverse("g_inv", g);
  a->add_skew("a1", Word::letter(g), Word());
  a->add_skew("a2", Word::letter(g), Word());
  return a;
}

Polynomial W(const Alphabet& a, std::string_view names, const Scalar& c = 1) { return Polynomial::of(a.word(names), c); }

// Naive Gaussian elimination over Q, used as an independent rank oracle.
std::size_t naive_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-6/4") == Scalar(-3) / 2);
  CHECK(to_string(parse_scalar("10/4")) == "5/2");
  CHECK(to_string(Scalar(-7)) == "-7");
  CHECK(pow(Scalar(2), -3) == Scalar(1) / 8);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("alphabet roles and words") {
  auto a = ujor_alphabet();
  CHECK(a->size() == 4);
  CHECK(a->is_group_letter(a->at("g")));
  CHECK(a->is_group_letter(a->at("g_inv")));
  CHECK_FALSE(a->is_group_letter(a->at("a1")));
  CHECK(a->role(a->at("g")).inverse == a->at("g_inv"));
  CHECK(a->inverse_word(a->word("g g g_inv")) == a->word("g g_inv g_inv"));
  CHECK(a->render(a->word("a1 g")) == "a1 g");
  CHECK_FALSE(a->find("nope"));
  CHECK_THROWS_AS(a->word("a1 nope"), Error);
}

TEST_CASE("polynomial arithmetic") {
  auto ap = ujor_alphabet();
  const Alphabet& a = *ap;
  Polynomial p = W(a, "a1") + W(a, "g");
  SUBCASE("identity") { CHECK(Polynomial::one() * p == p); }
  SUBCASE("concatenation") {
    Polynomial q = W(a, "g") * W(a, "a1");
    CHECK(q.size() == 1);
    CHECK(q.coeff(a.word("g a1")) == 1);
  }
  SUBCASE("expansion keeps distinct words") {
    Polynomial q = (W(a, "a1") + W(a, "g")) * (W(a, "a1") - W(a, "g"));
    CHECK(q == W(a, "a1 a1") - W(a, "a1 g") + W(a, "g a1") - W(a, "g g"));
    CHECK(q.size() == 4);
  }
  SUBCASE("cancellation to zero") {
    CHECK((p - p).is_zero());
    CHECK((p * Scalar(0)).is_zero());
    CHECK((p * Polynomial()).is_zero());
  }
  SUBCASE("degree") {
    CHECK(Polynomial().degree() < 0);
    CHECK(Polynomial::one().degree() == 0);
    CHECK((W(a, "a1 a2 g") + W(a, "g")).degree() == 3);
  }
  SUBCASE("power") { CHECK(power(p, 2) == p * p); }
}

TEST_CASE("substitution is an algebra map") {
  auto ap = ujor_alphabet();
  const Alphabet& a = *ap;
  auto t = std::make_shared<Alphabet>();
  LetterId T = t->add_group("T");
  LetterId Ti = t->add_inverse("T_inv", T);
  t->add_skew("K", Word::letter(Ti), Word::letter(T));
  Substitution phi(a.size());
  phi.set(a.at("a1"), Polynomial::of(t->word("K T_inv"), Scalar(1, 2)));
  CHECK(phi.apply(a.word("a1 a1")) == Polynomial::of(t->word("K T_inv K T_inv"), Scalar(1, 4)));
  CHECK_THROWS_AS(phi.apply(a.word("g")), Error);
  Substitution id = Substitution::identity(a.size());
  Polynomial p = W(a, "a1 a2") - W(a, "g", 3);
  CHECK(id.apply(p) == p);
}

TEST_CASE("free coproduct, counit, antipode") {
  auto ap = ujor_alphabet();
  const Alphabet& a = *ap;
  CHECK(free_coproduct(W(a, "a1"), a) == tensor(W(a, "a1"), Polynomial::one()) + tensor(W(a, "g"), W(a, "a1")));
  // Δ(a1 a2) expanded by hand.
  Tensor2 expected = tensor(W(a, "a1 a2"), Polynomial::one()) + tensor(W(a, "a1 g"), W(a, "a2")) +
                     tensor(W(a, "g a2"), W(a, "a1")) + tensor(W(a, "g g"), W(a, "a1 a2"));
  CHECK(free_coproduct(W(a, "a1 a2"), a) == expected);
  Tensor2 dg = free_coproduct(Polynomial::one() - W(a, "g"), a);
  CHECK(dg == tensor(Polynomial::one() - W(a, "g"), Polynomial::one()) +
                  tensor(W(a, "g"), Polynomial::one() - W(a, "g")));

  CHECK(counit_eval(W(a, "g g g"), a) == 1);
  CHECK(counit_eval(W(a, "g_inv"), a) == 1);
  CHECK(counit_eval(Polynomial::one() - W(a, "g"), a) == 0);
  Polynomial z = W(a, "a1 a2") - W(a, "a2 a1") - W(a, "a1 a1", Scalar(1, 2)) + W(a, "a2") + W(a, "a1", Scalar(1, 2));
  CHECK(counit_eval(z, a) == 0);

  CHECK(antipode_apply(W(a, "g"), a) == W(a, "g_inv"));
  CHECK(antipode_apply(W(a, "a1"), a) == -W(a, "g_inv a1"));
  // S is an anti-homomorphism.
  CHECK(antipode_apply(W(a, "a1 a2"), a) == antipode_apply(W(a, "a2"), a) * antipode_apply(W(a, "a1"), a));
}

TEST_CASE("skew letter with both tags") {
  auto t = std::make_shared<Alphabet>();
  LetterId T = t->add_group("T");
  LetterId Ti = t->add_inverse("T_inv", T);
  t->add_skew("K", Word::letter(Ti), Word::letter(T));
  Polynomial K = Polynomial::of(t->word("K")), TT = Polynomial::of(t->word("T")), TI = Polynomial::of(t->word("T_inv"));
  CHECK(free_coproduct(K, *t) == tensor(K, TT) + tensor(TI, K));
  // S(K) = -l^-1 K r^-1 with l = T^-1, r = T.
  CHECK(antipode_apply(K, *t) == -Polynomial::of(t->word("T K T_inv")));
}

TEST_CASE("tensor operations") {
  auto ap = ujor_alphabet();
  const Alphabet& a = *ap;
  Tensor2 x = tensor(W(a, "a1"), W(a, "g"));
  CHECK((x - x).is_zero());
  CHECK((x * Scalar(2)).entries().front().coeff == 2);
  CHECK(multiply_legs(tensor(W(a, "g"), W(a, "a1"))) == W(a, "g a1"));
  CHECK(render(tensor(W(a, "a1"), Polynomial::one()), a).find("a1 ⊗ 1") != std::string::npos);
  CHECK(tensor(Polynomial(), W(a, "a1")).is_zero());
}

TEST_CASE("matrix basics") {
  Matrix m{{1, 2}, {3, 4}};
  CHECK(m * Matrix::identity(2) == m);
  CHECK((m * m) == Matrix{{7, 10}, {15, 22}});
  CHECK(Matrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}.is_unipotent_upper());
  CHECK_FALSE(m.is_unipotent_upper());
  CHECK(Matrix{{1, 1}, {0, 1}}.to_string() == "(1,1),(0,1)");
  Matrix k = kron(Matrix::identity(2), m);
  CHECK(k.rows() == 4);
  CHECK(k(2, 3) == 2);
  CHECK(k(0, 2) == 0);
}

TEST_CASE("rank agrees with naive elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m(r, c);
    std::vector<std::vector<Scalar>> rows(r, std::vector<Scalar>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        // Sparse small entries so that rank deficiency happens often.
        long v = static_cast<long>(rng() % 5) - 2;
        Scalar s = rng() % 3 ? Scalar(0) : Scalar(v) / Scalar(static_cast<long>(1 + rng() % 3));
        m(i, j) = s;
        rows[i][j] = s;
      }
    CHECK(rank(m) == naive_rank(rows));
  }
}

TEST_CASE("nullspace and solve") {
  Matrix m{{1, 2, 3}, {2, 4, 6}};
  auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  auto x = solve(Matrix{{2, 0}, {0, 4}}, {Scalar(1), Scalar(2)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar(1, 2));
  CHECK((*x)[1] == Scalar(1, 2));
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, {Scalar(1), Scalar(2)}));
  std::vector<std::size_t> piv;
  Matrix r = rref(Matrix{{0, 2}, {1, 1}}, &piv);
  CHECK(r == Matrix::identity(2));
  CHECK(piv.size() == 2);
}

TEST_CASE("linear span of polynomials") {
  auto ap = ujor_alphabet();
  const Alphabet& a = *ap;
  LinearSpan s;
  CHECK(s.insert(W(a, "a1") + W(a, "g")));
  CHECK(s.insert(W(a, "a1") - W(a, "g")));
  CHECK_FALSE(s.insert(W(a, "g", 5)));
  CHECK(s.dimension() == 2);
  CHECK(s.inputs() == 3);
  CHECK(s.contains(W(a, "a1")));
  CHECK_FALSE(s.contains(W(a, "a2")));
  auto c = s.express(W(a, "a1", 2));
  REQUIRE(c);
  Polynomial back = (W(a, "a1") + W(a, "g")) * (*c)[0] + (W(a, "a1") - W(a, "g")) * (*c)[1] + W(a, "g", 5) * (*c)[2];
  CHECK(back == W(a, "a1", 2));
  CHECK_FALSE(s.express(W(a, "a2")));
  CHECK_FALSE(s.insert(Polynomial()));
}

TEST_CASE("braided vector space V(1,2)") {
  auto v = make_V12();
  // c(x1⊗x1) = x1⊗x1: column 0 is the first basis vector.
  CHECK(v.c(0, 0) == 1);
  for (std::size_t i = 1; i < 4; ++i) CHECK(v.c(i, 0) == 0);
  CHECK(check_braid_equation(v));

  // Independent oracle: apply c leg-wise to basis tensors of V⊗V⊗V.
  using Vec3 = std::map<std::array<int, 3>, Scalar>;
  auto c_on = [](int i, int j) {
    // c(xi⊗x1) = x1⊗xi, c(xi⊗x2) = (x1 + x2)⊗xi
    std::vector<std::pair<std::array<int, 2>, Scalar>> out;
    if (j == 0) {
      out.push_back({{0, i}, 1});
    } else {
      out.push_back({{0, i}, 1});
      out.push_back({{1, i}, 1});
    }
    return out;
  };
  auto apply = [&](const Vec3& x, int leg) {
    Vec3 y;
    for (const auto& [k, s] : x)
      for (const auto& [p, t] : c_on(k[leg], k[leg + 1])) {
        auto nk = k;
        nk[leg] = p[0];
        nk[leg + 1] = p[1];
        y[nk] += s * t;
      }
    std::erase_if(y, [](const auto& e) { return e.second == 0; });
    return y;
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::vector<Scalar> column(4);
      for (const auto& [p, t] : c_on(i, j)) column[2 * p[0] + p[1]] += t;
      for (std::size_t r = 0; r < 4; ++r) CHECK(v.c(r, 2 * i + j) == column[r]);
    }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Vec3 x{{{a, b, c}, 1}};
        CHECK(apply(apply(apply(x, 0), 1), 0) == apply(apply(apply(x, 1), 0), 1));
      }
  BraidedSpace broken{Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 2}}};
  broken.c(1, 0) = 1;
  CHECK_FALSE(check_braid_equation(broken));
}
