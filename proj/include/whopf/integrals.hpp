#pragma once

// Integrals, non-degeneracy, dual pairs, Maschke's criterion and integral-based formulas.

#include <optional>

#include "whopf/wha.hpp"

namespace whopf {

enum class Side { Left, Right };

/// A non-degenerate left integral ell in H with its dual left integral lambda in H*.
template <class S>
struct DualPair {
  Vec<S> ell;
  Vec<S> lambda;
};

/// Left: {l : h l = eps_t(h) l}; right: {r : r h = r eps_s(h)}.
template <class S>
Subspace<S> integral_space(const WeakHopfAlgebra<S>& h, Side side);

/// Is phi -> (phi -> ell) a bijection H* -> H?
template <class S>
bool is_nondegenerate(const WeakHopfAlgebra<S>& h, const Vec<S>& ell);

/// Searches integer combinations of the left integral basis by increasing height. Throws
/// NotFrobenius when dim of the left integrals differs from dim H_t, SearchExhausted when
/// the search (with retries at larger heights) finds nothing although the dimensions agree.
template <class S>
Vec<S> find_nondegenerate_integral(const WeakHopfAlgebra<S>& h);

/// The unique lambda with lambda -> ell = 1; checks ell -> lambda = eps and that lambda is
/// a left integral of H*. Throws Inconsistent otherwise.
template <class S>
DualPair<S> dual_integral(const WeakHopfAlgebra<S>& h, const Vec<S>& ell);

template <class S>
DualPair<S> find_dual_pair(const WeakHopfAlgebra<S>& h) {
  return dual_integral(h, find_nondegenerate_integral(h));
}

template <class S>
struct MaschkeResult {
  bool semisimple = false;
  std::optional<Vec<S>> normalized_integral;
};

/// Semisimple iff some left integral has eps_t(l) = 1.
template <class S>
MaschkeResult<S> maschke(const WeakHopfAlgebra<S>& h);

/// (a, b) -> Tr(L_a L_b) on the regular representation.
template <class S>
Mat<S> trace_form(const WeakHopfAlgebra<S>& h);

/// Characteristic zero: semisimple iff the trace form is non-degenerate.
template <class S>
bool trace_form_semisimple(const WeakHopfAlgebra<S>& h);

/// Residuals of g(1)<lambda, h g(2)> = S(h(1))<lambda, h(2) g> for the left integral lambda
/// and of <rho, g(1) h> g(2) = <rho, g h(1)> S(h(2)) for the right integral rho (default
/// rho = S(lambda)), over all basis pairs (g, h).
template <class S>
ValidationReport invariance_check(const WeakHopfAlgebra<S>& h, const Vec<S>& lambda,
                                  const std::optional<Vec<S>>& rho = std::nullopt);

/// The matrix of phi -> (ell <- phi) -> lambda on H*; throws Mismatch unless it is S^T.
template <class S>
Mat<S> antipode_from_integrals(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair);

/// <lambda, T(S^-1(ell(1))) ell(2)>, which equals trace(T).
template <class S>
S trace_via_integrals(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair, const Mat<S>& t);

}  // namespace whopf
