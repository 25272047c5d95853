#pragma once

// Group-like elements of H and H*, the distinguished pair (alpha, a), the S^4 formula,
// twisted counital maps and the modules they define.

#include <optional>
#include <vector>

#include "whopf/integrals.hpp"

namespace whopf {

enum class Decision { Yes, No, Undecided };

const char* decision_name(Decision d);

/// Result of a search for an invertible element of a subspace.
template <class S>
struct InvertibleSearch {
  Decision decision = Decision::No;
  std::optional<Vec<S>> witness;
};

/// Looks for an invertible element among the columns' span (columns lie in the unital
/// subalgebra `algebra`). Integer combinations are tried by height up to max_search_height();
/// if none is invertible, the grid is widened until it exceeds the degree of the determinant
/// of left multiplication on `algebra`, at which point an empty result proves that this
/// determinant vanishes identically. Undecided only when that grid is too large to scan.
template <class S>
InvertibleSearch<S> find_invertible_in_span(const WeakHopfAlgebra<S>& h, const Subspace<S>& algebra,
                                            const Mat<S>& columns);

// ---- predicates

/// Invertible, Delta(g) = (g (x) g) Delta(1) and Delta(g) = Delta(1) (g (x) g).
template <class S>
bool is_grouplike(const WeakHopfAlgebra<S>& h, const Vec<S>& g);

/// <gamma, hg> = <gamma, h 1(1)> <gamma, S(1(2)) g> for all h, g.
template <class S>
bool in_g1_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

/// <gamma, hg> = <gamma, h S(1(1))> <gamma, 1(2) g> for all h, g.
template <class S>
bool in_g2_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

/// Invertible in H* and in both half group-like sets.
template <class S>
bool is_dual_grouplike(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

/// Does g = S(y) y^-1 for an invertible y in H_s with S^2(y) = y? The witness is y.
/// Throws PreconditionUnmet if g is not group-like, Undecidable if the search cannot decide.
template <class S>
InvertibleSearch<S> is_trivial_grouplike(const WeakHopfAlgebra<S>& h, const Vec<S>& g);

/// Same class in G(H)/G_0(H), i.e. g h^-1 is trivial.
template <class S>
bool coset_equal(const WeakHopfAlgebra<S>& h, const Vec<S>& g, const Vec<S>& k);

// ---- distinguished group-likes

template <class S>
struct DistinguishedPair {
  Vec<S> alpha;  // <alpha, h> = <lambda, ell h>
  Vec<S> a;      // <lambda, ell(1)> ell(2)
  DualPair<S> source;
};

/// Throws RegularityViolated unless S^2 = id on H_min, Mismatch if a postcondition fails.
template <class S>
DistinguishedPair<S> distinguished_pair(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair);

/// S^4(h) = a^-1 (alpha -> h <- alpha^-1) a on every basis element.
template <class S>
ValidationReport radford_check(const WeakHopfAlgebra<S>& h, const DistinguishedPair<S>& dp);

/// The four compositions of ell_L, ell_R, lambda_L, lambda_R.
template <class S>
ValidationReport lambda_ell_relations(const WeakHopfAlgebra<S>& h, const DistinguishedPair<S>& dp);

// ---- twisted counital maps and gamma-modules

/// h -> <gamma, h 1(1)> S(1(2)); throws NotHalfGrouplike unless gamma is in G_1(H*).
template <class S>
Mat<S> twisted_eps_s(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

/// h -> S(1(1)) <gamma, 1(2) h>; throws NotHalfGrouplike unless gamma is in G_2(H*).
template <class S>
Mat<S> twisted_eps_t(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

template <class S>
struct TwistedCounitals {
  Mat<S> eps_s;
  Mat<S> eps_t;
};

template <class S>
TwistedCounitals<S> twisted_counitals(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  return {twisted_eps_s(h, gamma), twisted_eps_t(h, gamma)};
}

/// H_s as a right H-module through y . h = eps_s^gamma(y h). `action[i]` acts on coordinates
/// relative to the echelon basis of `hs`: coords(y . e_i) = action[i] * coords(y).
template <class S>
struct GammaModule {
  Vec<S> gamma;
  Subspace<S> hs;
  std::vector<Mat<S>> action;
};

/// Throws NotHalfGrouplike, or Mismatch if a module axiom fails.
template <class S>
GammaModule<S> gamma_module(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

/// The module W_ell on H_s defined by ell y h = ell (y . h), and gamma_ell(h) = eps(1 . h).
template <class S>
struct IntegralModule {
  Vec<S> gamma;
  std::vector<Mat<S>> action;
};

template <class S>
IntegralModule<S> integral_module(const WeakHopfAlgebra<S>& h, const Vec<S>& ell);

/// Is H_s^gamma1 isomorphic to H_s^gamma2? The witness v in H_s satisfies
/// v eps_s^gamma1(h) = eps_s^gamma2(h v) for all h.
template <class S>
InvertibleSearch<S> gamma_module_iso(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma1, const Vec<S>& gamma2);

/// {T(1)} for the self-intertwiners T of H_s^gamma; throws Mismatch unless it equals
/// Z(H) cap H_s and has the dimension of H_t* cap H_s*.
template <class S>
Subspace<S> self_intertwiners(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

template <class S>
struct TwistedIntegralSpaces {
  Subspace<S> left;   // {x : g x = eps_t^gamma(g) x}
  Subspace<S> right;  // {x : x g = x eps_s^gamma(g)}
};

template <class S>
TwistedIntegralSpaces<S> twisted_integral_spaces(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

/// L_g and R_g in H* for a group-like g in H.
template <class S>
TwistedIntegralSpaces<S> twisted_integral_spaces_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& g) {
  return twisted_integral_spaces(dualize(h), g);
}

// ---- automorphisms

/// h -> g h g^-1; throws PreconditionUnmet unless g is group-like, Mismatch if the result
/// is not a weak Hopf algebra automorphism.
template <class S>
Mat<S> grouplike_automorphism(const WeakHopfAlgebra<S>& h, const Vec<S>& g);

/// h -> gamma -> h <- gamma^-1.
template <class S>
Mat<S> dual_grouplike_automorphism(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma);

/// Is phi conjugation by a trivial group-like u? The witness is u.
template <class S>
InvertibleSearch<S> is_trivial_automorphism(const WeakHopfAlgebra<S>& h, const Mat<S>& phi);

struct AntipodeOrder {
  std::optional<int> order;  // smallest k with S^(4k) trivial
  int bound = 64;
  bool undecided_seen = false;
};

template <class S>
AntipodeOrder antipode_order_report(const WeakHopfAlgebra<S>& h, int bound = 64);

}  // namespace whopf
