#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nchopf/completion.hpp"
#include "nchopf/hopf_ops.hpp"
#include "nchopf/linalg.hpp"
#include "nchopf/presentation.hpp"
#include "nchopf/tensor.hpp"

namespace nchopf {

/// A presentation together with its completed rewrite system.
struct QuotientContext {
  AlgebraPresentation presentation;
  RewriteSystem system;
  ConfluenceCertificate certificate;

  /// Completes the presentation up to `degree`.
  static QuotientContext build(AlgebraPresentation presentation, int degree = 6,
                               const CompletionLimits& limits = {});

  const Alphabet& alphabet() const { return system.alphabet(); }
  /// Throws NoCertificate unless the certificate covers `degree`.
  void require(int degree) const;
  /// Normal form; the certificate must cover deg(p).
  Polynomial nf(const Polynomial& p) const;
  Polynomial nf(const Word& w) const { return nf(Polynomial::of(w)); }
  /// Leg-wise normal form.
  Tensor2 nf(const Tensor2& t) const;
  Tensor3 nf(const Tensor3& t) const;
  std::string render(const Polynomial& p) const { return nchopf::render(p, alphabet(), system.order()); }
  std::string render(const Tensor2& t) const { return nchopf::render(t, alphabet()); }
};

/// Δ(p) computed in the free algebra, then reduced leg by leg.
Tensor2 coproduct_in_quotient(const Polynomial& p, const QuotientContext& q);

/// Δ(p) = p⊗1 + left⊗p in the quotient.
bool is_skew_primitive(const Polynomial& p, const Word& left, const QuotientContext& q);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

/// Δ(r) vanishes leg-wise and ε(r) = 0 for every relation r.
CheckReport coproduct_descends(const QuotientContext& q);
/// S(r) reduces to 0 for every relation r, and
/// m(S⊗id)Δ(w) = ε(w) = m(id⊗S)Δ(w) for every normal word w of length ≤ 3.
CheckReport antipode_descends(const QuotientContext& q);

/// γ_h(p) = h p h^-1 - p, reduced.
Polynomial adjoint_apply(const Word& h, const Polynomial& p, const QuotientContext& q);

/// Matrix of the conjugation by h on the presentation's skew basis
/// (1 - g, a_1, ..., a_k); column j is h·b_j in basis coordinates. Throws
/// BasisExpressFailure when some h·b_j leaves the span and InvalidArgument
/// when the presentation has no skew basis.
Matrix adjoint_matrix(const Word& h, const QuotientContext& q);

/// Algebra map between two quotients given on generators.
struct HopfMapSpec {
  const QuotientContext* source = nullptr;
  const QuotientContext* target = nullptr;
  Substitution assignment;
};

struct MapReport {
  bool ok = true;
  std::string failure;  // which condition failed
  std::string witness;  // canonical rendering of the offending element
};

/// (a) source relations map to 0, (b) (φ⊗φ)Δ(x) = Δ(φ(x)) and
/// (c) ε(φ(x)) = ε(x) for every generator x.
MapReport check_hopf_map(const HopfMapSpec& map);

struct IsoReport {
  enum class Status { IsoUpTo, Fails };
  Status status = Status::IsoUpTo;
  int degree = 0;
  bool injective = true;
  bool surjective = true;
  std::string failed_part;  // "injectivity" or "surjectivity"
  std::string witness;
};

/// Injective: images of the source normal words of length ≤ d are linearly
/// independent. Surjective: the normal-word counts of length ≤ d agree and
/// every target normal word of length ≤ d lies in the span of those images.
IsoReport check_iso_up_to_degree(const HopfMapSpec& map, int degree);

/// Per-length normal-word counts of a braided factor together with the rank
/// of the free abelian group it is bosonized with.
struct GradedReference {
  std::vector<std::uint64_t> braided;
  std::size_t group_rank = 1;

  /// Jordan plane counts computed from its presentation.
  static GradedReference jordan_plane(std::size_t group_rank, int maxlen = 8);
  /// Tensor algebra on one generator: one word per length.
  static GradedReference free_rank_one(std::size_t group_rank, int maxlen = 8);
  /// Per-length counts of the product, by convolution with the counts of
  /// reduced group words in Z^rank.
  std::vector<std::uint64_t> expected(int maxlen) const;
};

/// Number of elements of Z^rank with |e|_1 = n.
std::uint64_t lattice_sphere(std::size_t rank, int n);

/// Per-length normal-word counts of q equal the reference up to `maxlen`.
bool graded_match(const QuotientContext& q, const GradedReference& reference, int maxlen = 8);

/// Basis of {p : Δ(p) = p⊗1 + left⊗p} inside the span of normal words of
/// length ≤ maxlen, via an exact nullspace computation.
std::vector<Polynomial> skew_primitive_space(const QuotientContext& q, const Word& left, int maxlen);

}  // namespace nchopf
