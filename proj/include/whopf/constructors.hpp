#pragma once

// Builders for groupoid algebras, function algebras, group algebras, minimal weak Hopf
// algebras H_min(B, A, g), matrix weak Hopf algebras and tensor products.

#include <string>
#include <vector>

#include "whopf/wha.hpp"

namespace whopf {

/// A finite groupoid. compose[f][g] is the index of f o g ("f after g"), defined exactly
/// when source(f) == target(g), and -1 otherwise.
struct GroupoidPresentation {
  struct Morphism {
    std::string label;
    int source = 0;
    int target = 0;
  };
  int objects = 0;
  std::vector<Morphism> morphisms;
  std::vector<std::vector<int>> compose;

  int size() const { return static_cast<int>(morphisms.size()); }
  /// Identity morphism of each object; valid after check().
  std::vector<int> identities() const;
  /// Inverse of each morphism; valid after check().
  std::vector<int> inverses() const;
  /// Throws InvalidPresentation naming the violated category or groupoid axiom.
  void check() const;
};

/// Objects 1..n, one morphism m_xy from y to x for every pair, so m_xy o m_yz = m_xz.
GroupoidPresentation pair_groupoid(int n, const std::string& prefix = "m");
/// A group as a one-object groupoid; table[a][b] = a*b.
GroupoidPresentation group_groupoid(const std::vector<std::vector<int>>& table, std::vector<std::string> labels);
GroupoidPresentation cyclic_group(int n);
/// S_3 with elements listed as permutations in one-line notation, identity first.
GroupoidPresentation symmetric_group3();
GroupoidPresentation disjoint_union(const GroupoidPresentation& a, const GroupoidPresentation& b);

template <class S>
WeakHopfAlgebra<S> groupoid_algebra(const GroupoidPresentation& g, const FieldSpec& field = FieldSpec::rational());

template <class S>
WeakHopfAlgebra<S> function_algebra(const GroupoidPresentation& g, const FieldSpec& field = FieldSpec::rational());

template <class S>
WeakHopfAlgebra<S> group_algebra(const GroupoidPresentation& g, const FieldSpec& field = FieldSpec::rational()) {
  if (g.objects != 1) throw Error(ErrorCode::InvalidPresentation, "a group has exactly one object");
  return groupoid_algebra<S>(g, field);
}

/// M_n with grouplike matrix units E_xy; identical to the pair groupoid algebra.
template <class S>
WeakHopfAlgebra<S> matrix_wha(int n, const FieldSpec& field = FieldSpec::rational());

/// Basis index i1 * dim2 + i2; fields are joined (Q embeds in every cyclotomic field).
template <class S>
WeakHopfAlgebra<S> tensor_product(const WeakHopfAlgebra<S>& a, const WeakHopfAlgebra<S>& b);

/// The four-dimensional Hopf algebra generated by g, x with g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x (x) 1 + g (x) x. Not semisimple.
template <class S>
WeakHopfAlgebra<S> sweedler_algebra();

/// A split semisimple algebra B = M_{n_1} + ... + M_{n_r} with a central subalgebra A
/// (generated by 1 and blockwise scalar elements) and an element g of B.
template <class S>
struct SemisimplePresentation {
  std::vector<int> blocks;
  std::vector<std::vector<S>> central_generators;  // each: one scalar per block
  std::vector<Mat<S>> g;                           // one matrix per block

  int dim() const;
  /// Offset of block b's matrix units in the standard basis of B.
  int offset(int block) const;
  /// Index of E_ij in block b.
  int index(int block, int i, int j) const { return offset(block) + i * blocks[static_cast<std::size_t>(block)] + j; }
  std::vector<std::string> labels() const;
};

template <class S>
SemisimplePresentation<S> diagonal_presentation(const std::vector<int>& blocks, const std::vector<S>& diagonal);

/// The standard-basis algebra of B with its structure constants.
template <class S>
struct BlockAlgebra {
  int dim = 0;
  std::vector<std::vector<std::pair<int, S>>> products;  // [i*dim+j] -> (k, v)
  Vec<S> unit;
  Vec<S> mul(const Vec<S>& a, const Vec<S>& b) const;
  S regular_trace(const Vec<S>& a) const;
};

template <class S>
BlockAlgebra<S> block_algebra(const SemisimplePresentation<S>& p);

/// Terms (i, j, v) of the two-sided separability element sum v e_i (x) e_j of B.
template <class S>
std::vector<Term2<S>> separability_element(const SemisimplePresentation<S>& p);

/// Checks (a (x) 1)e = e(1 (x) a), e(a (x) 1) = (1 (x) a)e for a basis, and m(e) = 1.
template <class S>
bool is_two_sided_separability_element(const BlockAlgebra<S>& b, const std::vector<Term2<S>>& e);

/// H_min(B, A, g). Throws TraceConditionViolated, NotSeparable, InvalidPresentation.
template <class S>
WeakHopfAlgebra<S> minimal_wha(const SemisimplePresentation<S>& p);

}  // namespace whopf
