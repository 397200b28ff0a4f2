#pragma once

#include <map>
#include <string>
#include <vector>

#include "nchopf/completion.hpp"
#include "nchopf/group.hpp"
#include "nchopf/hopf_ops.hpp"
#include "nchopf/linalg.hpp"
#include "nchopf/presentation.hpp"

namespace nchopf {

// Letter names shared by the constructors below: group generators keep their
// GroupSpec names, inverses get the suffix "_inv", the skew-primitives are
// "a1" and "a2". Precedence: g_1 > g_1_inv > g_2 > g_2_inv > ... > a2 > a1.
// Conjugation rules are installed for every generator and every inverse.

/// Free Hopf algebra on g^{±1}, a1, a2 with g a1 = a1 g + g - g^2 and
/// g a2 = a2 g + a1 g.
AlgebraPresentation make_wujor();

/// make_wujor() modulo z - λ(1 - g^2), where
/// z = a1 a2 - a2 a1 - a1^2/2 + a2 + a1/2.
AlgebraPresentation make_ujor_lambda(const Scalar& lambda);

/// Deformation with additive ξ: for h in G,
///   h a1 = a1 h,  h a2 = (a2 + η(h) a1 + ξ(h)(1 - g)) h,
///   a1 a2 - a2 a1 - a1^2/2 = λ(1 - g^2).
/// Throws InvalidTriple unless the triple is Jordanian with χ = ε, and
/// WrongXiMode unless ξ is additive.
AlgebraPresentation make_U_xi(const YDTriple& triple, const XiMap& xi, const Scalar& lambda);

/// Jordanian family over G: h a1 = (a1 + η(h)(1 - g)) h,
/// h a2 = (a2 + η(h) a1 + ξ(h)(1 - g)) h with ξ = (η² - η)/2, and z = 0.
AlgebraPresentation make_ujor_D(const YDTriple& triple);

/// The same conjugation data with ζ = η but free generator values for ξ and
/// no relation between a1 and a2. γ_h(z) is computed here before z is
/// killed.
AlgebraPresentation make_wujor_D(const YDTriple& triple, const std::vector<Scalar>& xi_values);

/// Ohn's algebra on T^{±1}, K, Y with K, Y ∈ P_{T^-1, T}:
///   [K,T] = T^2 - 1, [Y,T] = -ħ/2 (KT + TK),
///   [K,Y] = -1/2 (YT + TY + YT^-1 + T^-1 Y).
/// Precedence Y > K > T > T_inv. Throws ZeroPlanck for ħ = 0.
AlgebraPresentation make_ohn(const Scalar& hbar);

/// k<x1, x2> / (x2 x1 - x1 x2 + x1^2/2), plain letters.
AlgebraPresentation make_jordan_plane();

/// gamma^{±1}, a with gamma a gamma^-1 = a + 1 - gamma and a ∈ P_{gamma,1}.
AlgebraPresentation make_example_indecomposable();

/// 1 - g for a group word g.
Polynomial one_minus(const Word& g);

/// Two-dimensional braided vector space; c acts on the basis
/// (x1⊗x1, x1⊗x2, x2⊗x1, x2⊗x2), column j holding the image of basis vector j.
struct BraidedSpace {
  Matrix c;
};

/// c(xi⊗x1) = x1⊗xi, c(xi⊗x2) = (x1 + x2)⊗xi.
BraidedSpace make_V12();

/// (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on V⊗V⊗V.
bool check_braid_equation(const BraidedSpace& space);

/// Iterated Ore extension R[x_1; σ_1, δ_1][x_2; σ_2, δ_2]... written over its
/// own alphabet, together with an embedding into the algebra it should
/// reproduce. σ defaults to the identity and δ to zero on letters left out.
struct OreTower {
  struct Level {
    LetterId variable;
    std::map<LetterId, Polynomial> sigma;
    std::map<LetterId, Polynomial> delta;
  };

  AlphabetPtr alphabet;
  /// Generators of the coefficient ring R and its defining relations.
  std::vector<LetterId> base;
  std::vector<Polynomial> base_relations;
  std::vector<Level> levels;
  /// Tower letter -> element of the target algebra (over its alphabet).
  Substitution embedding;
};

struct OreReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks, in the target algebra, x·s = σ(s)x + δ(s) for every coefficient
/// letter s of each level and for products of up to three such letters
/// (σ extended multiplicatively, δ by the σ-Leibniz rule), and that σ and δ
/// send the relations of the ring below to zero. Throws NotConfluent unless
/// `certificate` covers degree 4.
OreReport verify_ore_tower(const OreTower& tower, const RewriteSystem& target,
                           const ConfluenceCertificate& certificate);

/// The tower k[g^{±1}][a1; δ1][a2; σ, δ2] over the alphabet of `u`
/// (make_ujor_lambda(0)).
OreTower ore_tower_u(const AlgebraPresentation& u);

/// k[T^{±1}][x; δ][y; σ, D] with x = K T^-1, y = Y T^-1, targeting
/// make_ohn(ħ).
OreTower ore_tower_ohn(const AlgebraPresentation& ohn, const Scalar& hbar);

}  // namespace nchopf
