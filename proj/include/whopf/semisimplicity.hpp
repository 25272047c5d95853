#pragma once

// Traces of S^2, block traces over primitive idempotents, connectedness, and the
// trace-based semisimplicity criteria evaluated as implications on a given algebra.

#include <optional>
#include <string>
#include <vector>

#include "whopf/integrals.hpp"

namespace whopf {

/// Complete orthogonal primitive idempotents of a commutative unital subalgebra `a` of H
/// (containing 1), by splitting along minimal polynomials. Throws NonSplit when some minimal
/// polynomial has roots outside the field or a repeated root.
template <class S>
std::vector<Vec<S>> primitive_idempotents(const WeakHopfAlgebra<S>& h, const Subspace<S>& a);

struct Connectedness {
  bool connected = false;    // Z(H) cap H_s = k1
  bool biconnected = false;  // and the same for H*
  int center_source_dim = 0;
  int dual_center_source_dim = 0;
};

template <class S>
Connectedness connectedness(const WeakHopfAlgebra<S>& h);

template <class S>
struct TraceS2 {
  S direct;   // trace of the S^2 matrix
  S formula;  // <eps_s(lambda), eps_s(ell)>
};

template <class S>
TraceS2<S> trace_s2(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair);

/// trace(P S^2 P) for the projection P.
template <class S>
S compressed_trace_s2(const WeakHopfAlgebra<S>& h, const Mat<S>& projection);

template <class S>
struct BlockTrace {
  std::string label;
  Vec<S> idempotent;
  S trace;
};

/// One criterion: when the hypothesis holds the conclusion must hold. A hypothesis that could
/// not be evaluated (for example, idempotents outside the field) is empty.
struct Implication {
  std::string name;
  std::optional<bool> hypothesis;
  bool conclusion = false;
  bool holds() const { return !hypothesis || !*hypothesis || conclusion; }
};

template <class S>
struct TraceReport {
  S tr_s2_direct;
  std::optional<S> tr_s2_formula;
  // Tr(S^2|pH) for primitive idempotents p of Z(H) cap H_s
  std::optional<std::vector<BlockTrace<S>>> source_blocks;
  // Tr(S^2|H* pi) for primitive idempotents pi of H_s* cap H_t*
  std::optional<std::vector<BlockTrace<S>>> dual_blocks;
  // Tr(S^2|pHp) for primitive idempotents p of Z(H_min)
  std::optional<std::vector<BlockTrace<S>>> min_blocks;
  Connectedness connectivity;
  bool regular = false;       // S^2 = id on H_min
  bool dual_regular = false;  // S^2 = id on H*_min
  bool semisimple = false;    // Maschke
  bool cosemisimple = false;  // Maschke for H*
  bool trace_form_agrees = false;
  std::vector<Implication> implications;

  bool ok() const {
    if (!trace_form_agrees) return false;
    if (tr_s2_formula && !(*tr_s2_formula == tr_s2_direct)) return false;
    for (const auto& i : implications)
      if (!i.holds()) return false;
    return true;
  }
};

template <class S>
TraceReport<S> semisimplicity_report(const WeakHopfAlgebra<S>& h);

/// For semisimple H with H_t = H_s: H* is semisimple and eps_t(lambda) is an invertible
/// element of Z(H*) cap H_s*. Throws PreconditionUnmet if the hypotheses fail.
template <class S>
ValidationReport coinciding_bases_check(const WeakHopfAlgebra<S>& h);

}  // namespace whopf
