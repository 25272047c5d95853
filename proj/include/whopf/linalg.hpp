#pragma once

// Exact linear algebra on Eigen containers with Rational or Cyclotomic entries.

#include <Eigen/Core>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "whopf/scalar.hpp"

namespace whopf {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool is_zero_vector(const Vec<S>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

template <class S>
Vec<S> unit_vector(int n, int i) {
  Vec<S> v = Vec<S>::Zero(n);
  v(i) = S(1);
  return v;
}

/// Reduced row echelon form: `rows` holds only the nonzero rows (rank x cols), `pivots`
/// their pivot columns in increasing order.
template <class S>
struct RowEchelon {
  Mat<S> rows;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Fraction-free (Bareiss) over Q, Gauss-Jordan over cyclotomic fields.
template <class S>
RowEchelon<S> rref(const Mat<S>& a);

template <class S>
int rank(const Mat<S>& a) {
  return rref(a).rank();
}

template <class S>
S determinant(const Mat<S>& a);

/// Throws Singular.
template <class S>
Mat<S> invert(const Mat<S>& a);

template <class S>
S trace(const Mat<S>& a) {
  S t(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// (M (x) N)(e_i (x) e_j) uses index i * N.cols() + j on both sides.
template <class S>
Mat<S> kronecker(const Mat<S>& m, const Mat<S>& n);

/// A linear subspace of S^ambient, stored as its reduced echelon basis (one vector per
/// row), which makes equality a comparison of matrices.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `vectors`.
  static Subspace span_rows(const Mat<S>& vectors);
  /// Span of the columns of `vectors`.
  static Subspace span_columns(const Mat<S>& vectors) { return span_rows(vectors.transpose()); }
  static Subspace span(int ambient, const std::vector<Vec<S>>& vectors);
  static Subspace whole(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat<S>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec<S> vector(int i) const { return basis_.row(i).transpose(); }
  /// Basis vectors as columns (ambient x dim).
  Mat<S> columns() const { return basis_.transpose(); }

  bool contains(const Vec<S>& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis, or nullopt when v lies outside.
  std::optional<Vec<S>> coordinates(const Vec<S>& v) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_ = 0;
  Mat<S> basis_;
  std::vector<int> pivots_;
};

/// {x : a x = 0}.
template <class S>
Subspace<S> kernel(const Mat<S>& a);

template <class S>
struct AffineSolution {
  Vec<S> particular;
  Subspace<S> kernel;
};

/// All x with a x = b; nullopt when b is outside the column space.
template <class S>
std::optional<AffineSolution<S>> solve(const Mat<S>& a, const Vec<S>& b);

/// Like solve, but throws NoSolution.
template <class S>
AffineSolution<S> solve_or_throw(const Mat<S>& a, const Vec<S>& b, const char* what);

/// Sparse incremental Gauss-Jordan for large structured systems: equations are added one
/// at a time and reduced against the pivots found so far.
template <class S>
class SparseLinearSystem {
 public:
  using Row = std::map<int, S>;

  explicit SparseLinearSystem(int unknowns) : unknowns_(unknowns) {}

  int unknowns() const { return unknowns_; }
  /// Returns false if the equation was inconsistent with the previous ones.
  bool add_equation(Row coeffs, S rhs);
  bool consistent() const { return consistent_; }
  int rank() const { return static_cast<int>(pivot_rows_.size()); }
  /// Solution with every free unknown set to zero; requires consistent().
  Vec<S> particular() const;
  /// Basis of the homogeneous solution space, one vector per free unknown.
  std::vector<Vec<S>> kernel_basis() const;

 private:
  struct PivotRow {
    Row coeffs;  // pivot coefficient is 1 and not stored
    S rhs;
  };
  void reduce(Row& row, S& rhs) const;

  int unknowns_;
  bool consistent_ = true;
  std::map<int, PivotRow> pivot_rows_;
};

}  // namespace whopf
