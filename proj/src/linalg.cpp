#include "whopf/linalg.hpp"

#include <type_traits>

namespace whopf {

namespace {

// Back substitution from an echelon form whose pivots are nonzero but not normalized.
template <class S>
void echelon_to_reduced(Mat<S>& m, const std::vector<int>& pivots) {
  const int r = static_cast<int>(pivots.size());
  for (int k = r - 1; k >= 0; --k) {
    const int c = pivots[static_cast<std::size_t>(k)];
    const S inv = m(k, c).inverse();
    for (Eigen::Index j = c; j < m.cols(); ++j)
      if (!is_zero(m(k, j))) m(k, j) *= inv;
    for (int i = 0; i < k; ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j)
        if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
    }
  }
}

RowEchelon<Rational> rref_bareiss(const Mat<Rational>& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  // Scale every row to integers; row scaling does not change the row space.
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(rows), std::vector<mpz_class>(static_cast<std::size_t>(cols)));
  for (Eigen::Index i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!a(i, j).is_zero()) den = lcm(den, a(i, j).denominator());
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!a(i, j).is_zero()) m[i][j] = mpz_class(a(i, j).value() * den);
  }
  std::vector<int> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(cols) && r < static_cast<std::size_t>(rows); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const mpz_class& piv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const mpz_class f = m[i][c];
      for (std::size_t j = c + 1; j < static_cast<std::size_t>(cols); ++j) {
        mpz_class v = piv * m[i][j] - f * m[r][j];
        if (prev != 1) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  Mat<Rational> out(static_cast<Eigen::Index>(r), cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Rational(m[i][j]);
  echelon_to_reduced(out, pivots);
  return {std::move(out), std::move(pivots)};
}

template <class S>
RowEchelon<S> rref_gauss_jordan(const Mat<S>& a) {
  Mat<S> m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const S inv = m(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {m.topRows(r), std::move(pivots)};
}

}  // namespace

template <class S>
RowEchelon<S> rref(const Mat<S>& a) {
  if constexpr (std::is_same_v<S, Rational>)
    return rref_bareiss(a);
  else
    return rref_gauss_jordan(a);
}

template <class S>
S determinant(const Mat<S>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Mat<S> m = a;
  const Eigen::Index n = m.rows();
  S det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const S inv = m(c, c).inverse();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class S>
Mat<S> invert(const Mat<S>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  RowEchelon<S> e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots.back() >= n)) throw Error(ErrorCode::Singular, "matrix is singular");
  return e.rows.rightCols(n);
}

template <class S>
Mat<S> kronecker(const Mat<S>& m, const Mat<S>& n) {
  Mat<S> out = Mat<S>::Zero(m.rows() * n.rows(), m.cols() * n.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (is_zero(m(i, j))) continue;
      out.block(i * n.rows(), j * n.cols(), n.rows(), n.cols()) = m(i, j) * n;
    }
  return out;
}

// ---------------------------------------------------------------- Subspace

template <class S>
Subspace<S> Subspace<S>::span_rows(const Mat<S>& vectors) {
  Subspace out(static_cast<int>(vectors.cols()));
  RowEchelon<S> e = rref(vectors);
  out.basis_ = std::move(e.rows);
  out.pivots_ = std::move(e.pivots);
  return out;
}

template <class S>
Subspace<S> Subspace<S>::span(int ambient, const std::vector<Vec<S>>& vectors) {
  Mat<S> m(static_cast<Eigen::Index>(vectors.size()), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  return span_rows(m);
}

template <class S>
Subspace<S> Subspace<S>::whole(int ambient) {
  return span_rows(Mat<S>::Identity(ambient, ambient));
}

template <class S>
std::optional<Vec<S>> Subspace<S>::coordinates(const Vec<S>& v) const {
  Vec<S> coords(dim());
  Vec<S> rest = v;
  for (int k = 0; k < dim(); ++k) {
    const S c = rest(pivots_[static_cast<std::size_t>(k)]);
    coords(k) = c;
    if (is_zero(c)) continue;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(basis_(k, j))) rest(j) -= c * basis_(k, j);
  }
  if (!is_zero_vector(rest)) return std::nullopt;
  return coords;
}

template <class S>
bool Subspace<S>::contains(const Vec<S>& v) const {
  return coordinates(v).has_value();
}

template <class S>
bool Subspace<S>::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

template <class S>
Subspace<S> Subspace<S>::sum(const Subspace& other) const {
  Mat<S> m(dim() + other.dim(), ambient_);
  m.topRows(dim()) = basis_;
  m.bottomRows(other.dim()) = other.basis_;
  return span_rows(m);
}

template <class S>
Subspace<S> Subspace<S>::intersect(const Subspace& other) const {
  // x = sum a_i u_i = sum b_j w_j  <=>  [U^T | -W^T] (a, b) = 0.
  Mat<S> m(ambient_, dim() + other.dim());
  m.leftCols(dim()) = basis_.transpose();
  m.rightCols(other.dim()) = -other.basis_.transpose();
  const Subspace k = kernel(m);
  Mat<S> vectors = k.basis().leftCols(dim()) * basis_;
  return span_rows(vectors);
}

template <class S>
Subspace<S> kernel(const Mat<S>& a) {
  const int n = static_cast<int>(a.cols());
  const RowEchelon<S> e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec<S>> vectors;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<S> v = Vec<S>::Zero(n);
    v(f) = S(1);
    for (int k = 0; k < e.rank(); ++k)
      if (!is_zero(e.rows(k, f))) v(e.pivots[static_cast<std::size_t>(k)]) = -e.rows(k, f);
    vectors.push_back(std::move(v));
  }
  return Subspace<S>::span(n, vectors);
}

template <class S>
std::optional<AffineSolution<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::InvalidArgument, "solve: dimension mismatch");
  const Eigen::Index n = a.cols();
  Mat<S> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const RowEchelon<S> e = rref(aug);
  if (e.rank() > 0 && e.pivots.back() == n) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(n);
  for (int k = 0; k < e.rank(); ++k) x(e.pivots[static_cast<std::size_t>(k)]) = e.rows(k, n);
  return AffineSolution<S>{std::move(x), kernel<S>(a)};
}

template <class S>
AffineSolution<S> solve_or_throw(const Mat<S>& a, const Vec<S>& b, const char* what) {
  auto s = solve(a, b);
  if (!s) throw Error(ErrorCode::NoSolution, what);
  return std::move(*s);
}

// ---------------------------------------------------------------- SparseLinearSystem

template <class S>
void SparseLinearSystem<S>::reduce(Row& row, S& rhs) const {
  auto it = row.begin();
  while (it != row.end()) {
    const auto p = pivot_rows_.find(it->first);
    if (p == pivot_rows_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    const S f = it->second;
    row.erase(it);
    for (const auto& [j, v] : p->second.coeffs) {
      auto [slot, inserted] = row.try_emplace(j, S(0));
      slot->second -= f * v;
      if (is_zero(slot->second)) row.erase(slot);
    }
    rhs -= f * p->second.rhs;
    it = row.upper_bound(col);
  }
}

template <class S>
bool SparseLinearSystem<S>::add_equation(Row coeffs, S rhs) {
  for (auto it = coeffs.begin(); it != coeffs.end();) it = is_zero(it->second) ? coeffs.erase(it) : std::next(it);
  reduce(coeffs, rhs);
  if (coeffs.empty()) {
    if (!is_zero(rhs)) consistent_ = false;
    return is_zero(rhs);
  }
  const int pivot = coeffs.begin()->first;
  const S inv = coeffs.begin()->second.inverse();
  coeffs.erase(coeffs.begin());
  for (auto& [j, v] : coeffs) v *= inv;
  rhs *= inv;
  pivot_rows_.emplace(pivot, PivotRow{std::move(coeffs), std::move(rhs)});
  return true;
}

template <class S>
Vec<S> SparseLinearSystem<S>::particular() const {
  if (!consistent_) throw Error(ErrorCode::NoSolution, "inconsistent sparse system");
  Vec<S> x = Vec<S>::Zero(unknowns_);
  for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
    S v = it->second.rhs;
    for (const auto& [j, c] : it->second.coeffs)
      if (!is_zero(x(j))) v -= c * x(j);
    x(it->first) = v;
  }
  return x;
}

template <class S>
std::vector<Vec<S>> SparseLinearSystem<S>::kernel_basis() const {
  std::vector<Vec<S>> out;
  for (int f = 0; f < unknowns_; ++f) {
    if (pivot_rows_.count(f)) continue;
    Vec<S> x = Vec<S>::Zero(unknowns_);
    x(f) = S(1);
    for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
      if (it->first > f) continue;
      S v(0);
      for (const auto& [j, c] : it->second.coeffs)
        if (!is_zero(x(j))) v -= c * x(j);
      x(it->first) = v;
    }
    out.push_back(std::move(x));
  }
  return out;
}

#define WHOPF_INSTANTIATE_LINALG(S)                                                         \
  template RowEchelon<S> rref<S>(const Mat<S>&);                                            \
  template S determinant<S>(const Mat<S>&);                                                 \
  template Mat<S> invert<S>(const Mat<S>&);                                                 \
  template Mat<S> kronecker<S>(const Mat<S>&, const Mat<S>&);                               \
  template class Subspace<S>;                                                               \
  template Subspace<S> kernel<S>(const Mat<S>&);                                            \
  template std::optional<AffineSolution<S>> solve<S>(const Mat<S>&, const Vec<S>&);         \
  template AffineSolution<S> solve_or_throw<S>(const Mat<S>&, const Vec<S>&, const char*); \
  template class SparseLinearSystem<S>;

WHOPF_INSTANTIATE_LINALG(Rational)
WHOPF_INSTANTIATE_LINALG(Cyclotomic)

}  // namespace whopf
