#include "nchopf/hopfcheck.hpp"

#include <algorithm>
#include <map>

#include "nchopf/error.hpp"
#include "nchopf/families.hpp"
#include "nchopf/normal_words.hpp"

namespace nchopf {

QuotientContext QuotientContext::build(AlgebraPresentation presentation, int degree, const CompletionLimits& limits) {
  auto result = complete(presentation.rewrite_system(), degree, limits);
  return QuotientContext{std::move(presentation), std::move(result.system), std::move(result.certificate)};
}

void QuotientContext::require(int degree) const {
  if (!certificate.covers(degree))
    throw Error(ErrorKind::NoCertificate, presentation.label + " is not certified up to degree " +
                                              std::to_string(degree) + " (" + certificate.reason + ")");
}

Polynomial QuotientContext::nf(const Polynomial& p) const {
  require(std::max(p.degree(), 0));
  return system.normal_form(p);
}

Tensor2 QuotientContext::nf(const Tensor2& t) const {
  Tensor2 out = t;
  for (std::size_t leg = 0; leg < 2; ++leg) out = map_leg(out, leg, [&](const Word& w) { return nf(w); });
  return out;
}

Tensor3 QuotientContext::nf(const Tensor3& t) const {
  Tensor3 out = t;
  for (std::size_t leg = 0; leg < 3; ++leg) out = map_leg(out, leg, [&](const Word& w) { return nf(w); });
  return out;
}

Tensor2 coproduct_in_quotient(const Polynomial& p, const QuotientContext& q) {
  return q.nf(free_coproduct(p, q.alphabet()));
}

bool is_skew_primitive(const Polynomial& p, const Word& left, const QuotientContext& q) {
  Polynomial np = q.nf(p);
  Tensor2 expected = tensor(np, Polynomial::one()) + tensor(q.nf(left), np);
  return coproduct_in_quotient(p, q) == expected;
}

CheckReport coproduct_descends(const QuotientContext& q) {
  CheckReport report;
  for (const auto& r : q.presentation.relations) {
    Tensor2 d = coproduct_in_quotient(r, q);
    if (!d.is_zero()) report.fail("coproduct of " + q.render(r) + " is " + q.render(d));
    Scalar e = counit_eval(r, q.alphabet());
    if (!is_zero(e)) report.fail("counit of " + q.render(r) + " is " + to_string(e));
  }
  return report;
}

CheckReport antipode_descends(const QuotientContext& q) {
  CheckReport report;
  const Alphabet& a = q.alphabet();
  for (const auto& r : q.presentation.relations) {
    Polynomial s = q.nf(antipode_apply(r, a));
    if (!s.is_zero()) report.fail("antipode of " + q.render(r) + " is " + q.render(s));
  }
  auto words = enumerate_normal_words(q.system, q.certificate, 3);
  for (const auto& bucket : words)
    for (const auto& w : bucket) {
      Tensor2 d = free_coproduct(w, a);
      Polynomial unit = Polynomial::constant(counit_eval(w, a));
      Polynomial left = q.nf(multiply_legs(map_leg(d, 0, [&](const Word& x) { return antipode_apply(Polynomial::of(x), a); })));
      Polynomial right = q.nf(multiply_legs(map_leg(d, 1, [&](const Word& x) { return antipode_apply(Polynomial::of(x), a); })));
      if (left != unit) report.fail("m(S⊗id)Δ(" + a.render(w) + ") = " + q.render(left));
      if (right != unit) report.fail("m(id⊗S)Δ(" + a.render(w) + ") = " + q.render(right));
    }
  return report;
}

Polynomial adjoint_apply(const Word& h, const Polynomial& p, const QuotientContext& q) {
  const Word hi = q.alphabet().inverse_word(h);
  return q.nf(Polynomial::of(h) * p * Polynomial::of(hi)) - q.nf(p);
}

Matrix adjoint_matrix(const Word& h, const QuotientContext& q) {
  if (!q.presentation.basis) throw Error(ErrorKind::InvalidArgument, q.presentation.label + " has no skew basis");
  const SkewBasis& sb = *q.presentation.basis;
  std::vector<Polynomial> basis{one_minus(sb.g)};
  for (LetterId l : sb.letters) basis.push_back(Polynomial::of(Word::letter(l)));
  LinearSpan span;
  for (const auto& b : basis) span.insert(q.nf(b));
  const std::size_t n = basis.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial image = q.nf(Polynomial::of(h) * basis[j] * Polynomial::of(q.alphabet().inverse_word(h)));
    auto coords = span.express(image);
    if (!coords)
      throw Error(ErrorKind::BasisExpressFailure,
                  "conjugate of basis element " + std::to_string(j) + " is " + q.render(image));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = (*coords)[i];
  }
  return m;
}

namespace {

const QuotientContext& source_of(const HopfMapSpec& m) {
  if (!m.source || !m.target) throw Error(ErrorKind::InvalidArgument, "map without source or target");
  return *m.source;
}

}  // namespace

MapReport check_hopf_map(const HopfMapSpec& map) {
  const QuotientContext& src = source_of(map);
  const QuotientContext& tgt = *map.target;
  const Alphabet& sa = src.alphabet();
  if (map.assignment.source_size() != sa.size())
    throw Error(ErrorKind::MissingImage, "assignment does not cover the source alphabet");
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!map.assignment.image(static_cast<LetterId>(i)))
      throw Error(ErrorKind::MissingImage, "no image for " + sa.name(static_cast<LetterId>(i)));

  MapReport report;
  auto fail = [&](std::string what, std::string witness) {
    if (!report.ok) return;
    report.ok = false;
    report.failure = std::move(what);
    report.witness = std::move(witness);
  };
  for (const auto& r : src.presentation.relations) {
    Polynomial image = tgt.nf(map.assignment.apply(r));
    if (!image.is_zero()) fail("relation " + src.render(r) + " does not map to zero", tgt.render(image));
  }
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const auto x = static_cast<LetterId>(i);
    const Polynomial& fx = *map.assignment.image(x);
    Tensor2 pushed = free_coproduct(Word::letter(x), sa);
    pushed = map_leg(pushed, 0, [&](const Word& w) { return map.assignment.apply(w); });
    pushed = map_leg(pushed, 1, [&](const Word& w) { return map.assignment.apply(w); });
    Tensor2 diff = tgt.nf(pushed) - coproduct_in_quotient(fx, tgt);
    if (!diff.is_zero()) fail("coproduct of " + sa.name(x) + " is not preserved", tgt.render(diff));
    Scalar e = counit_eval(fx, tgt.alphabet()) - counit_eval(Word::letter(x), sa);
    if (!is_zero(e)) fail("counit of " + sa.name(x) + " is not preserved", to_string(e));
  }
  return report;
}

IsoReport check_iso_up_to_degree(const HopfMapSpec& map, int degree) {
  const QuotientContext& src = source_of(map);
  const QuotientContext& tgt = *map.target;
  IsoReport report;
  report.degree = degree;
  auto fail = [&](const char* part, std::string witness) {
    if (report.status == IsoReport::Status::Fails) return;
    report.status = IsoReport::Status::Fails;
    report.failed_part = part;
    report.witness = std::move(witness);
  };

  auto source_words = enumerate_normal_words(src.system, src.certificate, degree);
  LinearSpan span;
  for (const auto& bucket : source_words)
    for (const auto& w : bucket)
      if (!span.insert(tgt.nf(map.assignment.apply(w))) && report.injective) {
        report.injective = false;
        fail("injectivity", "image of " + src.alphabet().render(w) + " is dependent on smaller images");
      }

  auto target_words = enumerate_normal_words(tgt.system, tgt.certificate, degree);
  std::uint64_t src_total = 0, tgt_total = 0;
  for (int n = 0; n <= degree; ++n) {
    src_total += source_words[n].size();
    tgt_total += target_words[n].size();
    if (src_total != tgt_total && report.surjective) {
      report.surjective = false;
      fail("surjectivity", "length <= " + std::to_string(n) + ": " + std::to_string(src_total) +
                               " source words vs " + std::to_string(tgt_total) + " target words");
    }
  }
  for (const auto& bucket : target_words) {
    for (const auto& w : bucket)
      if (!span.contains(Polynomial::of(w))) {
        if (report.surjective) fail("surjectivity", tgt.alphabet().render(w) + " is not in the image");
        report.surjective = false;
        break;
      }
    if (!report.surjective) break;
  }
  return report;
}

std::uint64_t lattice_sphere(std::size_t rank, int n) {
  // s(r, n) = Σ_k s(r-1, n-|k|), with s(0, 0) = 1.
  std::vector<std::uint64_t> prev(static_cast<std::size_t>(n) + 1, 0);
  prev[0] = 1;
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<std::uint64_t> cur(prev.size(), 0);
    for (int m = 0; m <= n; ++m)
      for (int k = -m; k <= m; ++k) cur[m] += prev[m - std::abs(k)];
    prev = std::move(cur);
  }
  return prev[n];
}

GradedReference GradedReference::jordan_plane(std::size_t group_rank, int maxlen) {
  auto q = QuotientContext::build(make_jordan_plane(), std::max(maxlen, 2));
  q.require(maxlen);
  return {count_normal_words(q.system, maxlen), group_rank};
}

GradedReference GradedReference::free_rank_one(std::size_t group_rank, int maxlen) {
  return {std::vector<std::uint64_t>(static_cast<std::size_t>(maxlen) + 1, 1), group_rank};
}

std::vector<std::uint64_t> GradedReference::expected(int maxlen) const {
  if (static_cast<int>(braided.size()) <= maxlen) throw Error(ErrorKind::InsufficientData, "reference too short");
  std::vector<std::uint64_t> out(static_cast<std::size_t>(maxlen) + 1, 0);
  for (int n = 0; n <= maxlen; ++n)
    for (int s = 0; s <= n; ++s) out[n] += braided[s] * lattice_sphere(group_rank, n - s);
  return out;
}

bool graded_match(const QuotientContext& q, const GradedReference& reference, int maxlen) {
  q.require(maxlen);
  return count_normal_words(q.system, maxlen) == reference.expected(maxlen);
}

std::vector<Polynomial> skew_primitive_space(const QuotientContext& q, const Word& left, int maxlen) {
  auto buckets = enumerate_normal_words(q.system, q.certificate, maxlen);
  std::vector<Word> words;
  for (const auto& b : buckets) words.insert(words.end(), b.begin(), b.end());
  const Polynomial gl = q.nf(left);

  // Columns: Δ(w) - w⊗1 - left⊗w for each normal word w, as tensor entries.
  std::vector<Tensor2> columns;
  std::map<std::array<Word, 2>, std::size_t> rows;
  for (const auto& w : words) {
    Polynomial pw = Polynomial::of(w);
    Tensor2 c = coproduct_in_quotient(pw, q) - tensor(pw, Polynomial::one()) - tensor(gl, pw);
    for (const auto& e : c) rows.emplace(e.key, rows.size());
    columns.push_back(std::move(c));
  }
  Matrix m(rows.size(), words.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& e : columns[j]) m(rows.at(e.key), j) = e.coeff;

  std::vector<Polynomial> basis;
  for (const auto& v : nullspace(m)) {
    Polynomial p;
    for (std::size_t j = 0; j < words.size(); ++j)
      if (!is_zero(v[j])) p += Polynomial::of(words[j], v[j]);
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace nchopf
