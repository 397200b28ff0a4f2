#include "nchopf/families.hpp"

#include "nchopf/error.hpp"

namespace nchopf {

Word AlgebraPresentation::group_word(const Exponents& h) const {
  if (h.size() != group_generators.size()) throw Error(ErrorKind::InvalidArgument, "exponent vector has wrong rank");
  Word w;
  for (std::size_t i = 0; i < h.size(); ++i) {
    LetterId letter = h[i] >= 0 ? group_generators[i].first : group_generators[i].second;
    for (long k = 0; k < std::labs(h[i]); ++k) w += Word::letter(letter);
  }
  return w;
}

const Scalar* AlgebraPresentation::param(std::string_view name) const {
  for (const auto& [k, v] : params)
    if (k == name) return &v;
  return nullptr;
}

Polynomial one_minus(const Word& g) { return Polynomial::one() - Polynomial::of(g); }

namespace {

enum class Top { None, Nichols, Jordanian };

// Conjugation data on the generators; inverse values are derived.
struct LiftingData {
  std::string label;
  GroupSpec group;
  std::vector<Scalar> zeta, eta, xi;
  Top top = Top::None;
  Scalar lambda;
};

AlgebraPresentation build_lifting(const LiftingData& d) {
  d.group.validate();
  const std::size_t n = d.group.rank();
  auto alphabet = std::make_shared<Alphabet>();
  std::vector<std::pair<LetterId, LetterId>> pairs;
  std::vector<LetterId> gens, invs;
  for (const auto& name : d.group.generators) gens.push_back(alphabet->add_group(name));
  for (std::size_t i = 0; i < n; ++i) {
    invs.push_back(alphabet->add_inverse(d.group.generators[i] + "_inv", gens[i]));
    pairs.emplace_back(gens[i], invs[i]);
  }

  AlgebraPresentation p;
  p.group_generators = pairs;
  const Word g = p.group_word(d.group.g);
  LetterId a1 = alphabet->add_skew("a1", g, Word());
  LetterId a2 = alphabet->add_skew("a2", g, Word());

  auto L = [](LetterId id) { return Polynomial::of(Word::letter(id)); };
  const Polynomial A1 = L(a1), A2 = L(a2), U = one_minus(g);

  std::vector<Polynomial> rels;
  for (std::size_t i = 0; i < n; ++i) {
    rels.push_back(L(gens[i]) * L(invs[i]) - Polynomial::one());
    rels.push_back(L(invs[i]) * L(gens[i]) - Polynomial::one());
  }
  std::vector<LetterId> group_letters = gens;
  group_letters.insert(group_letters.end(), invs.begin(), invs.end());
  for (std::size_t i = 0; i < group_letters.size(); ++i)
    for (std::size_t j = i + 1; j < group_letters.size(); ++j) {
      if (j == i + n) continue;  // partner pair, already covered
      rels.push_back(L(group_letters[i]) * L(group_letters[j]) - L(group_letters[j]) * L(group_letters[i]));
    }
  for (std::size_t i = 0; i < n; ++i) {
    // h a1 = (a1 + ζ(1-g)) h, h a2 = (a2 + η a1 + ξ(1-g)) h for h and h^-1.
    const Scalar values[2][3] = {{d.zeta[i], d.eta[i], d.xi[i]},
                                 {-d.zeta[i], -d.eta[i], -d.xi[i] + d.zeta[i] * d.eta[i]}};
    for (int s = 0; s < 2; ++s) {
      const Polynomial h = L(s == 0 ? gens[i] : invs[i]);
      const auto& [zeta, eta, xi] = values[s];
      rels.push_back(h * A1 - (A1 + U * zeta) * h);
      rels.push_back(h * A2 - (A2 + A1 * eta + U * xi) * h);
    }
  }
  Polynomial z = A1 * A2 - A2 * A1 - A1 * A1 * Scalar(1, 2);
  const Polynomial g2 = one_minus(g + g);
  if (d.top == Top::Nichols) rels.push_back(z - g2 * d.lambda);
  if (d.top == Top::Jordanian) rels.push_back(z + A2 + A1 * Scalar(1, 2) - g2 * d.lambda);

  // Each generator directly above its own inverse keeps normal group words
  // of the form h_1^{e_1} ... h_n^{e_n}.
  std::vector<LetterId> precedence;
  for (std::size_t i = 0; i < n; ++i) {
    precedence.push_back(gens[i]);
    precedence.push_back(invs[i]);
  }
  precedence.push_back(a2);
  precedence.push_back(a1);

  p.label = d.label;
  p.order = MonomialOrder(*alphabet, precedence);
  p.alphabet = std::move(alphabet);
  p.relations = std::move(rels);
  p.basis = SkewBasis{g, {a1, a2}};
  if (d.top != Top::None) p.params.emplace_back("lambda", d.lambda);
  return p;
}

LiftingData u_data(std::string label) {
  LiftingData d;
  d.label = std::move(label);
  d.group = GroupSpec::cyclic("g");
  d.zeta = {1};
  d.eta = {1};
  d.xi = {0};
  return d;
}

void require_jordanian_trivial_chi(const YDTriple& triple) {
  auto verdict = validate_yd_triple(triple);
  if (verdict.kind != TripleKind::Jordanian) throw Error(ErrorKind::InvalidTriple, verdict.reason);
  if (!triple.chi.is_trivial()) throw Error(ErrorKind::InvalidTriple, "character must be trivial");
}

}  // namespace

AlgebraPresentation make_wujor() { return build_lifting(u_data("wujor")); }

AlgebraPresentation make_ujor_lambda(const Scalar& lambda) {
  LiftingData d = u_data("ujor_lambda");
  d.top = Top::Jordanian;
  d.lambda = lambda;
  return build_lifting(d);
}

AlgebraPresentation make_U_xi(const YDTriple& triple, const XiMap& xi, const Scalar& lambda) {
  require_jordanian_trivial_chi(triple);
  if (xi.mode() != XiMap::Mode::Additive) throw Error(ErrorKind::WrongXiMode, "additive xi required");
  LiftingData d;
  d.label = "U_xi";
  d.group = triple.group;
  const std::size_t n = triple.group.rank();
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e = unit_vector(n, i);
    d.zeta.push_back(0);
    d.eta.push_back(triple.eta(e));
    d.xi.push_back(xi(e));
  }
  d.top = Top::Nichols;
  d.lambda = lambda;
  return build_lifting(d);
}

AlgebraPresentation make_ujor_D(const YDTriple& triple) {
  require_jordanian_trivial_chi(triple);
  XiMap xi = XiMap::jordanian(triple.eta);
  LiftingData d;
  d.label = "ujor_D";
  d.group = triple.group;
  const std::size_t n = triple.group.rank();
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e = unit_vector(n, i);
    d.zeta.push_back(triple.eta(e));
    d.eta.push_back(triple.eta(e));
    d.xi.push_back(xi(e));
  }
  d.top = Top::Jordanian;
  d.lambda = 0;
  AlgebraPresentation p = build_lifting(d);
  p.params.clear();
  return p;
}

AlgebraPresentation make_wujor_D(const YDTriple& triple, const std::vector<Scalar>& xi_values) {
  require_jordanian_trivial_chi(triple);
  const std::size_t n = triple.group.rank();
  if (xi_values.size() != n) throw Error(ErrorKind::InvalidArgument, "one xi value per generator expected");
  LiftingData d;
  d.label = "wujor_D";
  d.group = triple.group;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e = unit_vector(n, i);
    d.zeta.push_back(triple.eta(e));
    d.eta.push_back(triple.eta(e));
    d.xi.push_back(xi_values[i]);
  }
  return build_lifting(d);
}

AlgebraPresentation make_ohn(const Scalar& hbar) {
  if (is_zero(hbar)) throw Error(ErrorKind::ZeroPlanck, "hbar must be nonzero");
  auto alphabet = std::make_shared<Alphabet>();
  LetterId t = alphabet->add_group("T");
  LetterId ti = alphabet->add_inverse("T_inv", t);
  LetterId k = alphabet->add_skew("K", Word::letter(ti), Word::letter(t));
  LetterId y = alphabet->add_skew("Y", Word::letter(ti), Word::letter(t));
  auto L = [](LetterId id) { return Polynomial::of(Word::letter(id)); };
  const Polynomial T = L(t), Ti = L(ti), K = L(k), Y = L(y), one = Polynomial::one();
  const Scalar half(1, 2);

  AlgebraPresentation p;
  p.label = "ohn";
  p.relations = {
      T * Ti - one,
      Ti * T - one,
      K * T - T * K - (T * T - one),
      Y * T - T * Y + (K * T + T * K) * (hbar * half),
      K * Y - Y * K + (Y * T + T * Y + Y * Ti + Ti * Y) * half,
      // Conjugating the first two commutators by T^-1.
      K * Ti - Ti * K + one - Ti * Ti,
      Y * Ti - Ti * Y - (Ti * K + K * Ti) * (hbar * half),
  };
  p.order = MonomialOrder(*alphabet, {y, k, t, ti});
  p.alphabet = std::move(alphabet);
  p.params.emplace_back("hbar", hbar);
  p.group_generators = {{t, ti}};
  return p;
}

AlgebraPresentation make_jordan_plane() {
  auto alphabet = std::make_shared<Alphabet>();
  LetterId x1 = alphabet->add_plain("x1");
  LetterId x2 = alphabet->add_plain("x2");
  const Polynomial X1 = Polynomial::of(Word::letter(x1)), X2 = Polynomial::of(Word::letter(x2));
  AlgebraPresentation p;
  p.label = "jordan_plane";
  p.relations = {X2 * X1 - X1 * X2 + X1 * X1 * Scalar(1, 2)};
  p.order = MonomialOrder(*alphabet, {x2, x1}, {1, 1});
  p.alphabet = std::move(alphabet);
  return p;
}

AlgebraPresentation make_example_indecomposable() {
  auto alphabet = std::make_shared<Alphabet>();
  LetterId c = alphabet->add_group("gamma");
  LetterId ci = alphabet->add_inverse("gamma_inv", c);
  LetterId a = alphabet->add_skew("a", Word::letter(c), Word());
  auto L = [](LetterId id) { return Polynomial::of(Word::letter(id)); };
  const Polynomial G = L(c), Gi = L(ci), A = L(a), one = Polynomial::one();
  AlgebraPresentation p;
  p.label = "example";
  p.relations = {
      G * Gi - one,
      Gi * G - one,
      G * A - A * G - G + G * G,
      // gamma^-1 a = (a - 1 + gamma) gamma^-1
      Gi * A - A * Gi + Gi - one,
  };
  p.order = MonomialOrder(*alphabet, {c, ci, a});
  p.alphabet = std::move(alphabet);
  p.basis = SkewBasis{Word::letter(c), {a}};
  p.group_generators = {{c, ci}};
  return p;
}

BraidedSpace make_V12() {
  // Columns: images of x1⊗x1, x1⊗x2, x2⊗x1, x2⊗x2.
  // c(x1⊗x1) = x1⊗x1, c(x2⊗x1) = x1⊗x2,
  // c(x1⊗x2) = x1⊗x1 + x2⊗x1, c(x2⊗x2) = x1⊗x2 + x2⊗x2.
  return BraidedSpace{Matrix{{1, 1, 0, 0},
                             {0, 0, 1, 1},
                             {0, 1, 0, 0},
                             {0, 0, 0, 1}}};
}

bool check_braid_equation(const BraidedSpace& space) {
  const Matrix id = Matrix::identity(2);
  const Matrix c1 = kron(space.c, id), c2 = kron(id, space.c);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

}  // namespace nchopf
