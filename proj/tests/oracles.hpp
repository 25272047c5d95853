#pragma once

// Brute-force reference computations used to cross-check the library. They read the
// structure constants through mult()/comult() only and share no code paths with the
// algorithms under test.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "whopf/wha.hpp"

namespace oracle {

using whopf::Mat;
using whopf::Vec;

/// Leibniz expansion.
template <class S>
S determinant(const Mat<S>& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  S total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    S term(1);
    for (int i = 0; i < n; ++i) term = term * a(i, p[static_cast<std::size_t>(i)]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

template <class S>
Vec<S> mul(const whopf::WeakHopfAlgebra<S>& h, const Vec<S>& a, const Vec<S>& b) {
  const int n = h.dim();
  Vec<S> out = Vec<S>::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(k) += a(i) * b(j) * h.mult(i, j, k);
  return out;
}

template <class S>
Mat<S> comul(const whopf::WeakHopfAlgebra<S>& h, const Vec<S>& a) {
  const int n = h.dim();
  Mat<S> out = Mat<S>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(j, k) += a(i) * h.comult(i, j, k);
  return out;
}

/// Componentwise product in H (x) H.
template <class S>
Mat<S> mul2(const whopf::WeakHopfAlgebra<S>& h, const Mat<S>& x, const Mat<S>& y) {
  const int n = h.dim();
  Mat<S> out = Mat<S>::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (whopf::is_zero(x(a, b))) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (whopf::is_zero(y(c, d))) continue;
          const Vec<S> l = mul(h, whopf::unit_vector<S>(n, a), whopf::unit_vector<S>(n, c));
          const Vec<S> r = mul(h, whopf::unit_vector<S>(n, b), whopf::unit_vector<S>(n, d));
          out += (x(a, b) * y(c, d)) * (l * r.transpose());
        }
    }
  return out;
}

/// Associativity, unit, counit, multiplicativity of Delta and the weak counit identity on all
/// basis tuples, straight from the definitions.
template <class S>
bool weak_bialgebra_axioms(const whopf::WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  auto e = [n](int i) { return whopf::unit_vector<S>(n, i); };
  for (int i = 0; i < n; ++i) {
    if (mul(h, h.unit(), e(i)) != e(i) || mul(h, e(i), h.unit()) != e(i)) return false;
    const Mat<S> d = comul(h, e(i));
    if (Vec<S>(d * h.counit()) != e(i) || Vec<S>(d.transpose() * h.counit()) != e(i)) return false;
    for (int j = 0; j < n; ++j) {
      if (comul(h, mul(h, e(i), e(j))) != mul2(h, d, comul(h, e(j)))) return false;
      for (int k = 0; k < n; ++k)
        if (mul(h, mul(h, e(i), e(j)), e(k)) != mul(h, e(i), mul(h, e(j), e(k)))) return false;
    }
  }
  // eps(f g h) = eps(f g(1)) eps(g(2) h)
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      const Mat<S> dg = comul(h, e(g));
      for (int k = 0; k < n; ++k) {
        const S lhs = h.counit().dot(mul(h, mul(h, e(f), e(g)), e(k)));
        S rhs(0);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (!whopf::is_zero(dg(a, b)))
              rhs += dg(a, b) * h.counit().dot(mul(h, e(f), e(a))) * h.counit().dot(mul(h, e(b), e(k)));
        if (!(lhs == rhs)) return false;
      }
    }
  return true;
}

/// Tr(L_a L_b) on the regular representation, from the structure constants.
template <class S>
Mat<S> trace_form(const whopf::WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  Mat<S> out = Mat<S>::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Vec<S> ab = mul(h, whopf::unit_vector<S>(n, a), whopf::unit_vector<S>(n, b));
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k) out(a, b) += ab(k) * h.mult(k, c, c);
    }
  return out;
}

/// Sum of S(i,k) S(k,i).
template <class S>
S trace_of_square(const Mat<S>& s) {
  S acc(0);
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index k = 0; k < s.cols(); ++k) acc += s(i, k) * s(k, i);
  return acc;
}

/// Deterministic small integer matrices.
inline Mat<whopf::Rational> random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Mat<whopf::Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = whopf::Rational(d(rng));
  return m;
}

/// Code of the whopf::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<whopf::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const whopf::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace oracle
