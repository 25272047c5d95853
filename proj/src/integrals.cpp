#include "whopf/integrals.hpp"

#include "whopf/error.hpp"
#include "whopf/search.hpp"

namespace whopf {

namespace {

template <class S>
std::string first_nonzero(const Vec<S>& r) {
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (!is_zero(r(i))) return "coefficient " + std::to_string(i) + ": " + FieldOps<S>::format(r(i));
  return "0";
}

}  // namespace

template <class S>
Subspace<S> integral_space(const WeakHopfAlgebra<S>& h, Side side) {
  const int n = h.dim();
  const auto maps = counital_maps(h);
  // Stack (L_{e_i} - L_{eps_t(e_i)}) or (R_{e_i} - R_{eps_s(e_i)}) for every i.
  Mat<S> stacked(static_cast<Eigen::Index>(n) * n, n);
  for (int i = 0; i < n; ++i) {
    const Vec<S> e = h.basis(i);
    const Mat<S> block = side == Side::Left ? Mat<S>(h.left_mult(e) - h.left_mult(maps.eps_t * e))
                                            : Mat<S>(h.right_mult(e) - h.right_mult(maps.eps_s * e));
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = block;
  }
  return kernel(stacked);
}

template <class S>
bool is_nondegenerate(const WeakHopfAlgebra<S>& h, const Vec<S>& ell) {
  return rank(h.comul(ell)) == h.dim();
}

template <class S>
Vec<S> find_nondegenerate_integral(const WeakHopfAlgebra<S>& h) {
  const Subspace<S> ints = integral_space(h, Side::Left);
  const int ht = counital_subalgebras(h).Ht.dim();
  if (ints.dim() != ht)
    throw Error(ErrorCode::NotFrobenius, "dim of left integrals is " + std::to_string(ints.dim()) +
                                             " but dim H_t is " + std::to_string(ht));
  const Mat<S> basis = ints.columns();
  Vec<S> found;
  auto visit = [&](const std::vector<int>& c) {
    Vec<S> v = Vec<S>::Zero(h.dim());
    for (int i = 0; i < ints.dim(); ++i)
      if (c[static_cast<std::size_t>(i)] != 0) v += S(c[static_cast<std::size_t>(i)]) * basis.col(i);
    if (!is_nondegenerate(h, v)) return false;
    found = v;
    return true;
  };
  // A Frobenius algebra always has one; retry past the configured height before giving up.
  const int base = max_search_height();
  int previous = 0;
  for (int limit : {base, 2 * base, 4 * base}) {
    for (int height : search_heights(limit)) {
      if (height <= previous) continue;
      if (enumerate_height_shell(ints.dim(), previous, height, visit)) return found;
      previous = height;
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no non-degenerate left integral up to height " + std::to_string(previous));
}

template <class S>
DualPair<S> dual_integral(const WeakHopfAlgebra<S>& h, const Vec<S>& ell) {
  if (!is_nondegenerate(h, ell)) throw Error(ErrorCode::Inconsistent, "the integral is degenerate");
  // lambda -> ell = Delta(ell) lambda
  const auto sol = solve(h.comul(ell), h.unit());
  if (!sol) throw Error(ErrorCode::Inconsistent, "no lambda with lambda -> ell = 1");
  DualPair<S> pair{ell, sol->particular};
  const Vec<S> back = lact_dual(h, ell, pair.lambda);
  if (back != h.counit()) throw Error(ErrorCode::Inconsistent, "ell -> lambda != eps: " + first_nonzero<S>(back - h.counit()));
  if (!integral_space(dualize(h), Side::Left).contains(pair.lambda))
    throw Error(ErrorCode::Inconsistent, "lambda is not a left integral of the dual");
  return pair;
}

template <class S>
MaschkeResult<S> maschke(const WeakHopfAlgebra<S>& h) {
  const Mat<S> basis = integral_space(h, Side::Left).columns();
  const Mat<S> eps_t = counital_maps(h).eps_t;
  MaschkeResult<S> out;
  if (basis.cols() == 0) return out;
  const auto sol = solve<S>(eps_t * basis, h.unit());
  if (!sol) return out;
  out.semisimple = true;
  out.normalized_integral = Vec<S>(basis * sol->particular);
  return out;
}

template <class S>
Mat<S> trace_form(const WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  Vec<S> traces(n);
  for (int k = 0; k < n; ++k) traces(k) = trace<S>(h.left_mult(h.basis(k)));
  Mat<S> g = Mat<S>::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [k, v] : h.product_terms(a, b)) g(a, b) += v * traces(k);
  return g;
}

template <class S>
bool trace_form_semisimple(const WeakHopfAlgebra<S>& h) {
  return rank(trace_form(h)) == h.dim();
}

template <class S>
ValidationReport invariance_check(const WeakHopfAlgebra<S>& h, const Vec<S>& lambda,
                                  const std::optional<Vec<S>>& rho_in) {
  const int n = h.dim();
  const Mat<S>& anti = h.antipode();
  const Vec<S> rho = rho_in ? *rho_in : Vec<S>(anti.transpose() * lambda);
  // Pairings with products of basis elements: lam(i,j) = <lambda, e_i e_j>.
  Mat<S> lam = Mat<S>::Zero(n, n), rh = Mat<S>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : h.product_terms(i, j)) {
        lam(i, j) += v * lambda(k);
        rh(i, j) += v * rho(k);
      }
  AxiomCheck left("left_invariance"), right("right_invariance");
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) {
      if (left.passed) {
        // g(1) <lambda, x g(2)> - S(x(1)) <lambda, x(2) g>
        Vec<S> r = Vec<S>::Zero(n);
        for (const auto& t : h.coproduct_terms(g)) r(t.a) += t.v * lam(x, t.b);
        for (const auto& t : h.coproduct_terms(x)) r -= (t.v * lam(t.b, g)) * anti.col(t.a);
        if (!is_zero_vector(r)) {
          left.passed = false;
          left.witness = {g, x};
          left.residual = first_nonzero(r);
        }
      }
      if (right.passed) {
        // <rho, g(1) x> g(2) - <rho, g x(1)> S(x(2))
        Vec<S> r = Vec<S>::Zero(n);
        for (const auto& t : h.coproduct_terms(g)) r(t.b) += t.v * rh(t.a, x);
        for (const auto& t : h.coproduct_terms(x)) r -= (t.v * rh(g, t.a)) * anti.col(t.b);
        if (!is_zero_vector(r)) {
          right.passed = false;
          right.witness = {g, x};
          right.residual = first_nonzero(r);
        }
      }
    }
  return ValidationReport{{left, right}};
}

template <class S>
Mat<S> antipode_from_integrals(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair) {
  const int n = h.dim();
  Mat<S> out(n, n);
  for (int a = 0; a < n; ++a) {
    const Vec<S> x = ract(h, pair.ell, unit_vector<S>(n, a));
    out.col(a) = lact_dual(h, x, pair.lambda);
  }
  if (out != h.antipode().transpose())
    throw Error(ErrorCode::Mismatch, "(ell <- phi) -> lambda differs from the dual antipode");
  return out;
}

template <class S>
S trace_via_integrals(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair, const Mat<S>& t) {
  const Mat<S> s_inv = h.antipode_inverse();
  const Mat<S> ts = t * s_inv;
  S total(0);
  for (const auto& term : tensor_terms(h.comul(pair.ell))) {
    const Vec<S> y = h.mul(ts.col(term.a), h.basis(term.b));
    total += term.v * pair.lambda.dot(y);
  }
  return total;
}

#define WHOPF_INSTANTIATE_INTEGRALS(S)                                                                   \
  template Subspace<S> integral_space<S>(const WeakHopfAlgebra<S>&, Side);                               \
  template bool is_nondegenerate<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                           \
  template Vec<S> find_nondegenerate_integral<S>(const WeakHopfAlgebra<S>&);                             \
  template DualPair<S> dual_integral<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                       \
  template MaschkeResult<S> maschke<S>(const WeakHopfAlgebra<S>&);                                       \
  template Mat<S> trace_form<S>(const WeakHopfAlgebra<S>&);                                              \
  template bool trace_form_semisimple<S>(const WeakHopfAlgebra<S>&);                                     \
  template ValidationReport invariance_check<S>(const WeakHopfAlgebra<S>&, const Vec<S>&,                \
                                                const std::optional<Vec<S>>&);                           \
  template Mat<S> antipode_from_integrals<S>(const WeakHopfAlgebra<S>&, const DualPair<S>&);             \
  template S trace_via_integrals<S>(const WeakHopfAlgebra<S>&, const DualPair<S>&, const Mat<S>&);

WHOPF_INSTANTIATE_INTEGRALS(Rational)
WHOPF_INSTANTIATE_INTEGRALS(Cyclotomic)

}  // namespace whopf
