#pragma once

// Weak Hopf algebras given by structure constants.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "whopf/linalg.hpp"

namespace whopf {

/// One term v * (e_a (x) e_b) of an element of H (x) H.
template <class S>
struct Term2 {
  int a;
  int b;
  S v;
};

/// Elements of H (x) H (x) H, keyed by basis triples.
template <class S>
using Tensor3 = std::map<std::array<int, 3>, S>;

/// A finite-dimensional weak Hopf algebra over an exact field.
///
/// Conventions: e_i e_j = sum_k mult(i,j,k) e_k; Delta(e_i) = sum comult(i,j,k) e_j (x) e_k;
/// elements of H are column vectors, functionals are vectors of values on the basis; an
/// element X of H (x) H is an n x n matrix with X(a,b) the coefficient of e_a (x) e_b
/// (flattened index a*n+b). The antipode matrix has S(e_j) = sum_i S(i,j) e_i.
template <class S>
class WeakHopfAlgebra {
 public:
  using Scalar = S;
  using Element = Vec<S>;
  using Functional = Vec<S>;
  using Matrix = Mat<S>;

  WeakHopfAlgebra() = default;
  WeakHopfAlgebra(FieldSpec field, std::vector<std::string> labels);

  const FieldSpec& field() const { return field_; }
  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  // ---- construction (adds accumulate into existing coefficients)
  void add_mult(int i, int j, int k, const S& v);
  void add_comult(int i, int j, int k, const S& v);
  void set_unit(const Element& u) { unit_ = u; }
  void set_counit(const Functional& c) { counit_ = c; }
  void set_antipode(const Matrix& s) { antipode_ = s; }
  void clear_antipode() { antipode_.reset(); }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  // ---- raw structure
  S mult(int i, int j, int k) const;
  S comult(int i, int j, int k) const;
  /// Nonzero (k, value) with e_i e_j = sum value e_k.
  const std::vector<std::pair<int, S>>& product_terms(int i, int j) const {
    return mult_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  const std::vector<Term2<S>>& coproduct_terms(int i) const { return comult_[static_cast<std::size_t>(i)]; }
  const Element& unit() const { return unit_; }
  const Functional& counit() const { return counit_; }
  bool has_antipode() const { return antipode_.has_value(); }
  /// Throws NoAntipode when absent.
  const Matrix& antipode() const;

  // ---- elements
  Element basis(int i) const { return unit_vector<S>(n_, i); }
  Element mul(const Element& a, const Element& b) const;
  /// Column j is a * e_j.
  Matrix left_mult(const Element& a) const;
  /// Column j is e_j * a.
  Matrix right_mult(const Element& a) const;
  /// Delta(a) as an n x n coefficient matrix.
  Matrix comul(const Element& a) const;
  Matrix mul_tensor(const Matrix& x, const Matrix& y) const;
  Tensor3<S> mul_tensor3(const Tensor3<S>& x, const Tensor3<S>& y) const;
  /// (Delta (x) id) X and (id (x) Delta) X.
  Tensor3<S> comul_left(const Matrix& x) const;
  Tensor3<S> comul_right(const Matrix& x) const;
  S counit_of(const Element& a) const { return counit_.dot(a); }
  Element apply_S(const Element& a) const { return antipode() * a; }
  /// Throws NoAntipodeInverse if S is singular.
  Matrix antipode_inverse() const;
  Element apply_S_inverse(const Element& a) const { return antipode_inverse() * a; }
  bool is_invertible(const Element& a) const;
  /// Throws NotInvertible.
  Element invert_element(const Element& a) const;
  Matrix delta_one() const { return comul(unit_); }

  // ---- functionals (the dual algebra's operations, evaluated through H)
  S pair(const Functional& phi, const Element& h) const { return phi.dot(h); }
  Functional dual_mul(const Functional& phi, const Functional& psi) const;
  bool dual_is_invertible(const Functional& phi) const;
  Functional dual_invert(const Functional& phi) const;

  bool operator==(const WeakHopfAlgebra& o) const;

 private:
  FieldSpec field_;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<int, S>>> mult_;
  std::vector<std::vector<Term2<S>>> comult_;
  Element unit_;
  Functional counit_;
  std::optional<Matrix> antipode_;
  std::map<std::string, std::string> metadata_;
};

/// Nonzero entries of an H (x) H element.
template <class S>
std::vector<Term2<S>> tensor_terms(const Mat<S>& x);

// ---- validation

struct AxiomCheck {
  AxiomCheck() = default;
  explicit AxiomCheck(std::string n) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  std::vector<int> witness;  // basis indices of the first failing tuple
  std::string residual;      // human readable first nonzero residual coefficient
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const AxiomCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Associativity, unit, coassociativity, counit, multiplicativity of Delta, and the weak
/// unit and weak counit axioms, each over all basis tuples.
template <class S>
ValidationReport validate_weak_bialgebra(const WeakHopfAlgebra<S>& h);

/// The three antipode axioms for the given matrix, over all basis elements.
template <class S>
ValidationReport check_antipode(const WeakHopfAlgebra<S>& h, const Mat<S>& s);

/// Bialgebra and antipode checks together (requires an antipode).
template <class S>
ValidationReport validate(const WeakHopfAlgebra<S>& h);

/// Solves for S. Throws NoAntipode, NotUnique or Axiom26Failure.
template <class S>
Mat<S> solve_antipode(const WeakHopfAlgebra<S>& h);

/// Returns h with its antipode solved (and a supplied antipode checked against it).
template <class S>
WeakHopfAlgebra<S> with_antipode(WeakHopfAlgebra<S> h);

template <class S>
WeakHopfAlgebra<S> dualize(const WeakHopfAlgebra<S>& h);

// ---- counital maps and subalgebras

template <class S>
struct CounitalMaps {
  Mat<S> eps_t;
  Mat<S> eps_s;
};

template <class S>
CounitalMaps<S> counital_maps(const WeakHopfAlgebra<S>& h);

template <class S>
struct CounitalSubalgebras {
  Subspace<S> Ht, Hs, HtCapHs, Hmin, center, ZcapHs, ZcapHt;
  bool all_closed = true;
};

template <class S>
CounitalSubalgebras<S> counital_subalgebras(const WeakHopfAlgebra<S>& h);

template <class S>
Subspace<S> center(const WeakHopfAlgebra<S>& h);

/// Span of all products u v with u in a, v in b.
template <class S>
Subspace<S> product_span(const WeakHopfAlgebra<S>& h, const Subspace<S>& a, const Subspace<S>& b);

template <class S>
bool is_closed_under_mult(const WeakHopfAlgebra<S>& h, const Subspace<S>& a);

/// Trace of left multiplication by x on the subalgebra `sub` (x must lie in it).
template <class S>
S regular_trace(const WeakHopfAlgebra<S>& h, const Subspace<S>& sub, const Vec<S>& x);

// ---- Sweedler arrows

/// phi -> h = h(1) <phi, h(2)>
template <class S>
Vec<S> lact(const WeakHopfAlgebra<S>& h, const Vec<S>& phi, const Vec<S>& x);
/// h <- phi = <phi, h(1)> h(2)
template <class S>
Vec<S> ract(const WeakHopfAlgebra<S>& h, const Vec<S>& x, const Vec<S>& phi);
/// <h -> phi, g> = <phi, g h>
template <class S>
Vec<S> lact_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& x, const Vec<S>& phi);
/// <phi <- h, g> = <phi, h g>
template <class S>
Vec<S> ract_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& phi, const Vec<S>& x);

// ---- minimal part

template <class S>
struct MinimalData {
  Subspace<S> B;  // H_t
  Subspace<S> A;  // H_t cap H_s
  Vec<S> g;       // eps(b) = Tr_reg(g^-1 b) on H_t
  Vec<S> g_inverse;
};

/// Throws Degenerate.
template <class S>
MinimalData<S> minimal_data(const WeakHopfAlgebra<S>& h);

/// Does S^2 restrict to the identity on H_min?
template <class S>
bool is_regular(const WeakHopfAlgebra<S>& h);

/// Algebra automorphism checks shared by several modules: does `phi` preserve m, 1, Delta,
/// eps and S?
template <class S>
ValidationReport check_wha_morphism(const WeakHopfAlgebra<S>& h, const Mat<S>& phi);

}  // namespace whopf
