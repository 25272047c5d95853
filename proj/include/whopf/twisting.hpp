#pragma once

// Deformations of a weak Hopf algebra: H_q, regularization, twists (Theta, Theta-bar) and
// twists induced by dynamical twists of a Hopf algebra.

#include <optional>
#include <string>
#include <vector>

#include "whopf/wha.hpp"

namespace whopf {

// ---- base deformation

/// H_q: Delta'(h) = Delta(h)(1 (x) q), eps'(h) = eps(h q^-1), S'(h) = q^-1 S(h) q. Throws
/// PreconditionUnmet naming the failed condition (q in H_t, invertible, S^2(q) = q,
/// S(1(1)) q 1(2) = 1), Mismatch if the result fails validation.
template <class S>
WeakHopfAlgebra<S> deform_q(const WeakHopfAlgebra<S>& h, const Vec<S>& q);

template <class S>
struct Regularized {
  WeakHopfAlgebra<S> algebra;
  Vec<S> q;
};

/// Deforms by q = g^-1 from the minimal data so that S^2 = id on H_min; regular input is
/// returned unchanged with q = 1.
template <class S>
Regularized<S> regularize(const WeakHopfAlgebra<S>& h);

// ---- twists

template <class S>
struct Twist {
  Mat<S> theta;      // in Delta(1)(H (x) H)
  Mat<S> theta_bar;  // in (H (x) H)Delta(1), with theta theta_bar = Delta(1)
};

/// Leg conditions, theta theta_bar = Delta(1), and coassociativity of theta_bar Delta theta.
template <class S>
ValidationReport check_twist(const WeakHopfAlgebra<S>& h, const Twist<S>& t);

/// v = S(theta(1)) theta(2).
template <class S>
Vec<S> twist_v(const WeakHopfAlgebra<S>& h, const Twist<S>& t);

/// H_Theta with Delta_Theta(h) = theta_bar Delta(h) theta and S_Theta(h) = v^-1 S(h) v.
/// Throws NotATwist (with the failing condition), VNotInvertible, or Mismatch when the
/// counital maps differ from eps(theta(1) h) theta(2) and theta_bar(1) eps(h theta_bar(2)).
template <class S>
WeakHopfAlgebra<S> twist(const WeakHopfAlgebra<S>& h, const Twist<S>& t);

// ---- dynamical twists

/// Characters of a finite abelian group of group-likes, as exponents of a primitive e-th root
/// of unity (e the exponent of the group). Index 0 is the trivial character.
struct CharacterGroup {
  int exponent = 1;
  std::vector<std::vector<int>> powers;  // powers[lambda][a]: chi_lambda(a) = zeta_e^powers
  std::vector<std::vector<int>> sum;     // sum[lambda][mu] = index of lambda + mu
  int size() const { return static_cast<int>(powers.size()); }
};

/// Multiplication table of a list of group elements: table[i][j] = index of a_i a_j.
template <class S>
std::vector<std::vector<int>> group_table(const WeakHopfAlgebra<S>& u, const std::vector<Vec<S>>& a);

/// Enumerates all characters of an abelian group given by its table, with pruning.
CharacterGroup character_group(const std::vector<std::vector<int>>& table);

template <class S>
struct DynamicalTwistData {
  WeakHopfAlgebra<S> u;
  std::vector<Vec<S>> group;  // elements of A, group-like in U
  std::vector<Mat<S>> j;      // J(lambda) in U (x) U, indexed like character_group's output
};

/// Value of character lambda on group element index a.
template <class S>
S character_value(const FieldSpec& field, const CharacterGroup& chars, int lambda, int a);

/// P_mu = (1/|A|) sum_a mu(a^-1) a.
template <class S>
std::vector<Vec<S>> character_idempotents(const DynamicalTwistData<S>& d, const CharacterGroup& chars);

/// Checks U is a Hopf algebra, A a commutative group of group-likes, J invertible,
/// A-invariant and normalized, and the dynamical equation for every lambda. Throws
/// PreconditionUnmet, FieldTooSmall, NotInvertible or DynamicalEquationViolated.
template <class S>
CharacterGroup check_dynamical_data(const DynamicalTwistData<S>& d);

/// The trivial dynamical twist J = 1 (x) 1 on every character.
template <class S>
DynamicalTwistData<S> trivial_dynamical_data(const WeakHopfAlgebra<S>& u, const std::vector<Vec<S>>& group);

/// J(lambda) = sum j(lambda; mu, nu) P_mu (x) P_nu with
/// j(lambda; mu, nu) = xi(lambda, mu + nu) / (xi(lambda + nu, mu) xi(lambda, nu)),
/// where xi(lambda, 0) = 1 is enforced and xi[lambda][mu] must be nonzero.
template <class S>
DynamicalTwistData<S> gauge_dynamical_data(const WeakHopfAlgebra<S>& u, const std::vector<Vec<S>>& group,
                                           const std::vector<std::vector<S>>& xi);

/// matrix_wha(|A|) (x) U.
template <class S>
WeakHopfAlgebra<S> dynamical_host(const DynamicalTwistData<S>& d);

template <class S>
struct DynamicalTwist {
  WeakHopfAlgebra<S> host;
  Twist<S> twist;
  CharacterGroup characters;
};

template <class S>
DynamicalTwist<S> dynamical_theta(const DynamicalTwistData<S>& d);

template <class S>
struct BlockCharacterTrace {
  int degree = 0;
  S trace_g;      // Tr(pi(g))
  S trace_g_inv;  // Tr(pi(g^-1))
};

template <class S>
struct DynamicalReport {
  int dim = 0;
  S tr_s2_direct;
  std::optional<std::vector<BlockCharacterTrace<S>>> blocks;  // empty if a block does not split
  int target_base_dim = 0;
  int source_base_dim = 0;
  bool biconnected = false;
  bool regular = false;
  bool dual_semisimple_by_trace_criterion = false;  // biconnected, regular and Tr(S^2) != 0
  bool dual_semisimple_by_maschke = false;
  bool dual_semisimple_by_trace_form = false;
  bool ok() const;
};

/// Builds H_Theta, checks Tr(pi(g)) = deg pi blockwise for g = S(v)^-1 v, and decides the
/// semisimplicity of the dual by the biconnected trace criterion and by Maschke.
template <class S>
DynamicalReport<S> dynamical_cosemisimplicity_check(const DynamicalTwistData<S>& d);

}  // namespace whopf
