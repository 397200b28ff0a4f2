#include "nchopf/error.hpp"
#include "nchopf/families.hpp"

namespace nchopf {

namespace {

Polynomial letter(LetterId id) { return Polynomial::of(Word::letter(id)); }

class LevelMaps {
 public:
  LevelMaps(const OreTower::Level& level, std::size_t alphabet_size) : level_(level), sigma_(alphabet_size) {
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      auto id = static_cast<LetterId>(i);
      auto it = level.sigma.find(id);
      sigma_.set(id, it == level.sigma.end() ? letter(id) : it->second);
    }
  }

  Polynomial sigma(const Polynomial& p) const { return sigma_.apply(p); }

  // δ(s w) = δ(s) w + σ(s) δ(w).
  Polynomial delta(const Word& w) const {
    if (w.empty()) return {};
    auto it = level_.delta.find(w[0]);
    Polynomial head = it == level_.delta.end() ? Polynomial() : it->second;
    Word rest = w.sub(1);
    return head * Polynomial::of(rest) + sigma_.apply(Word::letter(w[0])) * delta(rest);
  }

  Polynomial delta(const Polynomial& p) const {
    Polynomial out;
    for (const auto& t : p) out += delta(t.word) * t.coeff;
    return out;
  }

  /// x s - σ(s) x - δ(s).
  Polynomial commutation(const Word& s) const {
    const Polynomial x = letter(level_.variable);
    const Polynomial S = Polynomial::of(s);
    return x * S - sigma(S) * x - delta(s);
  }

 private:
  const OreTower::Level& level_;
  Substitution sigma_;
};

void words_up_to(const std::vector<LetterId>& letters, std::size_t maxlen, Word prefix, std::vector<Word>& out) {
  if (!prefix.empty()) out.push_back(prefix);
  if (prefix.size() == maxlen) return;
  for (LetterId l : letters) words_up_to(letters, maxlen, prefix + Word::letter(l), out);
}

}  // namespace

OreReport verify_ore_tower(const OreTower& tower, const RewriteSystem& target,
                           const ConfluenceCertificate& certificate) {
  if (!certificate.covers(4)) throw Error(ErrorKind::NotConfluent, "target is not certified up to degree 4");
  OreReport report;
  const Alphabet& alpha = *tower.alphabet;
  auto vanishes = [&](const Polynomial& p, const std::string& what) {
    Polynomial r = target.normal_form(tower.embedding.apply(p));
    if (r.is_zero()) return;
    report.ok = false;
    report.failures.push_back(what + ": " + render(r, target.alphabet(), target.order()));
  };

  std::vector<LetterId> coefficients = tower.base;
  std::vector<Polynomial> below = tower.base_relations;
  for (const auto& level : tower.levels) {
    LevelMaps maps(level, alpha.size());
    const std::string var = alpha.name(level.variable);
    std::vector<Word> products;
    words_up_to(coefficients, 3, Word(), products);
    for (const auto& s : products) vanishes(maps.commutation(s), var + " commuted past " + alpha.render(s));
    for (const auto& r : below) {
      vanishes(maps.sigma(r), "sigma of " + render(r, alpha));
      vanishes(maps.delta(r), "delta of " + render(r, alpha));
    }
    for (LetterId s : coefficients) below.push_back(maps.commutation(Word::letter(s)));
    coefficients.push_back(level.variable);
  }
  return report;
}

OreTower ore_tower_u(const AlgebraPresentation& u) {
  const Alphabet& a = *u.alphabet;
  const LetterId g = a.at("g"), gi = a.at("g_inv"), a1 = a.at("a1"), a2 = a.at("a2");
  const Polynomial G = letter(g), Gi = letter(gi), A1 = letter(a1), one = Polynomial::one();
  const Scalar half(1, 2);
  OreTower t;
  t.alphabet = u.alphabet;
  t.base = {g, gi};
  t.base_relations = {G * Gi - one, Gi * G - one};
  t.levels.push_back({a1, {}, {{g, G * G - G}, {gi, Gi - one}}});
  t.levels.push_back({a2,
                      {{a1, A1 + one}},
                      {{g, -(A1 * G)}, {gi, Gi * A1}, {a1, A1 * half - A1 * A1 * half}}});
  t.embedding = Substitution::identity(a.size());
  return t;
}

OreTower ore_tower_ohn(const AlgebraPresentation& ohn, const Scalar& hbar) {
  auto alphabet = std::make_shared<Alphabet>();
  const LetterId t = alphabet->add_group("T");
  const LetterId ti = alphabet->add_inverse("T_inv", t);
  const LetterId x = alphabet->add_plain("x");
  const LetterId y = alphabet->add_plain("y");
  const Polynomial T = letter(t), Ti = letter(ti), X = letter(x), one = Polynomial::one();
  const Scalar half(1, 2), quarter(1, 4);

  OreTower tower;
  tower.base = {t, ti};
  tower.base_relations = {T * Ti - one, Ti * T - one};
  tower.levels.push_back({x, {}, {{t, T - Ti}, {ti, Ti * Ti * Ti - Ti}}});
  // D(T^-1) = -T^-1 D(T) T^-1, forced by T T^-1 = 1.
  const Polynomial dT = -(T * X) * hbar - (T - Ti) * (hbar * half);
  tower.levels.push_back({y,
                          {{x, X + one * Scalar(2)}},
                          {{t, dT},
                           {ti, -(Ti * dT * Ti)},
                           {x, X * X * hbar - (one - Ti * Ti * Ti * Ti) * (hbar * quarter)}}});

  const Alphabet& target = *ohn.alphabet;
  Substitution emb(alphabet->size());
  emb.set(t, letter(target.at("T")));
  emb.set(ti, letter(target.at("T_inv")));
  emb.set(x, letter(target.at("K")) * letter(target.at("T_inv")));
  emb.set(y, letter(target.at("Y")) * letter(target.at("T_inv")));
  tower.embedding = std::move(emb);
  tower.alphabet = std::move(alphabet);
  return tower;
}

}  // namespace nchopf
