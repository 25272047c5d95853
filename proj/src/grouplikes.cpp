#include "whopf/grouplikes.hpp"

#include <algorithm>
#include <cmath>

#include "whopf/error.hpp"
#include "whopf/search.hpp"

namespace whopf {

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

template <class S>
std::string first_nonzero(const Vec<S>& r) {
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (!is_zero(r(i))) return "coefficient " + std::to_string(i) + ": " + FieldOps<S>::format(r(i));
  return "0";
}

template <class S>
Mat<S> outer(const Vec<S>& a, const Vec<S>& b) {
  return a * b.transpose();
}

// gram(i, j) = <gamma, e_i e_j>
template <class S>
Mat<S> product_pairing(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  const int n = h.dim();
  Mat<S> g = Mat<S>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : h.product_terms(i, j)) g(i, j) += v * gamma(k);
  return g;
}

template <class S>
Mat<S> coords_of_columns(const Subspace<S>& sub, const Mat<S>& cols) {
  Mat<S> out(sub.dim(), cols.cols());
  for (Eigen::Index j = 0; j < cols.cols(); ++j) {
    auto c = sub.coordinates(cols.col(j));
    if (!c) throw Error(ErrorCode::Mismatch, "vector leaves the expected subspace");
    out.col(j) = *c;
  }
  return out;
}

// Grid scans beyond this many points are reported as undecided.
constexpr double kGridBudget = 4.0e6;

}  // namespace

template <class S>
InvertibleSearch<S> find_invertible_in_span(const WeakHopfAlgebra<S>& h, const Subspace<S>& algebra,
                                            const Mat<S>& columns) {
  InvertibleSearch<S> out;
  const int m = static_cast<int>(columns.cols());
  const int d = algebra.dim();
  if (m == 0) return out;
  // Left multiplication by each spanning vector, restricted to the subalgebra.
  std::vector<Mat<S>> mats;
  const Mat<S> abasis = algebra.columns();
  for (int i = 0; i < m; ++i) {
    Mat<S> prods(h.dim(), d);
    for (int j = 0; j < d; ++j) prods.col(j) = h.mul(columns.col(i), abasis.col(j));
    mats.push_back(coords_of_columns(algebra, prods));
  }
  auto visit = [&](const std::vector<int>& c) {
    Mat<S> m_c = Mat<S>::Zero(d, d);
    for (int i = 0; i < m; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) m_c += S(c[static_cast<std::size_t>(i)]) * mats[static_cast<std::size_t>(i)];
    if (rank(m_c) != d) return false;
    Vec<S> x = Vec<S>::Zero(h.dim());
    for (int i = 0; i < m; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) x += S(c[static_cast<std::size_t>(i)]) * columns.col(i);
    out.witness = x;
    return true;
  };
  const int configured = max_search_height();
  if (enumerate_by_height(m, configured, visit)) {
    out.decision = Decision::Yes;
    return out;
  }
  // det(sum c_i M_i) has degree at most d in each c_i; a grid with more than d values per
  // coordinate on which it vanishes forces it to vanish identically.
  const int needed = (d + 1) / 2;
  if (needed > configured) {
    if (std::pow(2.0 * needed + 1.0, m) > kGridBudget) {
      out.decision = Decision::Undecided;
      return out;
    }
    int previous = configured;
    for (int height = configured * 2; previous < needed; height *= 2) {
      const int top = std::min(height, needed);
      if (enumerate_height_shell(m, previous, top, visit)) {
        out.decision = Decision::Yes;
        return out;
      }
      previous = top;
    }
  }
  out.decision = Decision::No;
  return out;
}

// ---------------------------------------------------------------- predicates

template <class S>
bool is_grouplike(const WeakHopfAlgebra<S>& h, const Vec<S>& g) {
  if (!h.is_invertible(g)) return false;
  const Mat<S> dg = h.comul(g);
  const Mat<S> gg = outer<S>(g, g);
  const Mat<S> d1 = h.delta_one();
  return dg == h.mul_tensor(gg, d1) && dg == h.mul_tensor(d1, gg);
}

template <class S>
bool in_g1_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  if (is_zero_vector(gamma)) return false;
  const Mat<S> gram = product_pairing(h, gamma);
  // <gamma, S(e_b) e_g> = (S^T gram)(b, g)
  const Mat<S> gram_s = h.antipode().transpose() * gram;
  return gram == gram * h.delta_one() * gram_s;
}

template <class S>
bool in_g2_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  if (is_zero_vector(gamma)) return false;
  const Mat<S> gram = product_pairing(h, gamma);
  // <gamma, e_h S(e_a)> = (gram S)(h, a)
  return gram == gram * h.antipode() * h.delta_one() * gram;
}

template <class S>
bool is_dual_grouplike(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  return h.dual_is_invertible(gamma) && in_g1_dual(h, gamma) && in_g2_dual(h, gamma);
}

template <class S>
InvertibleSearch<S> is_trivial_grouplike(const WeakHopfAlgebra<S>& h, const Vec<S>& g) {
  if (!is_grouplike(h, g)) throw Error(ErrorCode::PreconditionUnmet, "element is not group-like");
  const int n = h.dim();
  const Subspace<S> hs = counital_subalgebras(h).Hs;
  const Mat<S> basis = hs.columns();
  const Mat<S>& s = h.antipode();
  // y in H_s with S^2 y = y and g y = S y
  Mat<S> system(2 * n, basis.cols());
  system.topRows(n) = (s * s - Mat<S>::Identity(n, n)) * basis;
  system.bottomRows(n) = (h.left_mult(g) - s) * basis;
  const Subspace<S> sol = kernel(system);
  const Mat<S> candidates = basis * sol.columns();
  auto res = find_invertible_in_span(h, hs, candidates);
  if (res.decision == Decision::Undecided)
    throw Error(ErrorCode::Undecidable, "cannot decide whether the solution space has an invertible element");
  return res;
}

template <class S>
bool coset_equal(const WeakHopfAlgebra<S>& h, const Vec<S>& g, const Vec<S>& k) {
  if (!is_grouplike(h, g) || !is_grouplike(h, k))
    throw Error(ErrorCode::PreconditionUnmet, "coset comparison needs group-like elements");
  return is_trivial_grouplike(h, h.mul(g, h.invert_element(k))).decision == Decision::Yes;
}

// ---------------------------------------------------------------- distinguished pair

template <class S>
DistinguishedPair<S> distinguished_pair(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair) {
  if (!is_regular(h)) throw Error(ErrorCode::RegularityViolated, "S^2 is not the identity on H_min");
  DistinguishedPair<S> dp{ract_dual(h, pair.lambda, pair.ell), ract(h, pair.ell, pair.lambda), pair};
  if (!is_dual_grouplike(h, dp.alpha)) throw Error(ErrorCode::Mismatch, "alpha is not group-like in H*");
  if (!is_grouplike(h, dp.a)) throw Error(ErrorCode::Mismatch, "a is not group-like");
  const Vec<S> s_ell = h.apply_S(pair.ell);
  if (s_ell != lact(h, dp.alpha, pair.ell))
    throw Error(ErrorCode::Mismatch, "S(ell) != alpha -> ell: " + first_nonzero<S>(s_ell - lact(h, dp.alpha, pair.ell)));
  const Vec<S> s_lambda = h.antipode().transpose() * pair.lambda;
  if (s_lambda != lact_dual(h, dp.a, pair.lambda))
    throw Error(ErrorCode::Mismatch, "S(lambda) != a -> lambda");
  return dp;
}

template <class S>
ValidationReport radford_check(const WeakHopfAlgebra<S>& h, const DistinguishedPair<S>& dp) {
  const int n = h.dim();
  const Mat<S> s2 = h.antipode() * h.antipode();
  const Mat<S> s4 = s2 * s2;
  const Vec<S> alpha_inv = h.dual_invert(dp.alpha);
  const Vec<S> a_inv = h.invert_element(dp.a);
  AxiomCheck check("radford_s4");
  for (int i = 0; i < n && check.passed; ++i) {
    const Vec<S> inner = lact(h, dp.alpha, ract(h, h.basis(i), alpha_inv));
    const Vec<S> r = s4.col(i) - h.mul(h.mul(a_inv, inner), dp.a);
    if (!is_zero_vector(r)) {
      check.passed = false;
      check.witness = {i};
      check.residual = first_nonzero(r);
    }
  }
  return ValidationReport{{check}};
}

template <class S>
ValidationReport lambda_ell_relations(const WeakHopfAlgebra<S>& h, const DistinguishedPair<S>& dp) {
  const int n = h.dim();
  const Vec<S>& ell = dp.source.ell;
  const Vec<S>& lambda = dp.source.lambda;
  const Mat<S> d_ell = h.comul(ell);
  const Mat<S>& s = h.antipode();
  const Mat<S> s_inv = h.antipode_inverse();
  const Vec<S> a_inv = h.invert_element(dp.a);
  AxiomCheck lr("ell_L_lambda_R"), ll("ell_L_lambda_L"), rr("ell_R_lambda_R"), rl("ell_R_lambda_L");
  auto record = [](AxiomCheck& c, int i, const Vec<S>& r) {
    if (c.passed && !is_zero_vector(r)) {
      c.passed = false;
      c.witness = {i};
      c.residual = first_nonzero(r);
    }
  };
  for (int i = 0; i < n; ++i) {
    const Vec<S> e = h.basis(i);
    const Vec<S> lam_r = h.left_mult(e).transpose() * lambda;   // lambda <- e
    const Vec<S> lam_l = h.right_mult(e).transpose() * lambda;  // e -> lambda
    record(lr, i, Vec<S>(d_ell * lam_r - s.col(i)));
    record(ll, i, Vec<S>(d_ell * lam_l - s_inv * lact(h, dp.alpha, e)));
    record(rr, i, Vec<S>(d_ell.transpose() * lam_r - s_inv * h.mul(a_inv, e)));
    record(rl, i, Vec<S>(d_ell.transpose() * lam_l - s * h.mul(ract(h, e, dp.alpha), a_inv)));
  }
  return ValidationReport{{lr, ll, rr, rl}};
}

// ---------------------------------------------------------------- twisted counitals

template <class S>
Mat<S> twisted_eps_s(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  if (!in_g1_dual(h, gamma)) throw Error(ErrorCode::NotHalfGrouplike, "functional is not in G_1(H*)");
  const int n = h.dim();
  const Mat<S> gram = product_pairing(h, gamma);
  const Mat<S>& s = h.antipode();
  Mat<S> out = Mat<S>::Zero(n, n);
  for (const auto& t : tensor_terms(h.delta_one()))
    for (int x = 0; x < n; ++x)
      if (!is_zero(gram(x, t.a))) out.col(x) += (t.v * gram(x, t.a)) * s.col(t.b);
  return out;
}

template <class S>
Mat<S> twisted_eps_t(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  if (!in_g2_dual(h, gamma)) throw Error(ErrorCode::NotHalfGrouplike, "functional is not in G_2(H*)");
  const int n = h.dim();
  const Mat<S> gram = product_pairing(h, gamma);
  const Mat<S>& s = h.antipode();
  Mat<S> out = Mat<S>::Zero(n, n);
  for (const auto& t : tensor_terms(h.delta_one()))
    for (int x = 0; x < n; ++x)
      if (!is_zero(gram(t.b, x))) out.col(x) += (t.v * gram(t.b, x)) * s.col(t.a);
  return out;
}

template <class S>
GammaModule<S> gamma_module(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  const int n = h.dim();
  const Mat<S> eps = twisted_eps_s(h, gamma);
  GammaModule<S> mod{gamma, counital_subalgebras(h).Hs, {}};
  const Mat<S> basis = mod.hs.columns();
  const int d = mod.hs.dim();
  for (int i = 0; i < n; ++i) {
    Mat<S> images(n, d);
    for (int j = 0; j < d; ++j) images.col(j) = eps * h.mul(basis.col(j), h.basis(i));
    mod.action.push_back(coords_of_columns(mod.hs, images));
  }
  auto act = [&](const Vec<S>& x) {
    Mat<S> m = Mat<S>::Zero(d, d);
    for (int i = 0; i < n; ++i)
      if (!is_zero(x(i))) m += x(i) * mod.action[static_cast<std::size_t>(i)];
    return m;
  };
  if (act(h.unit()) != Mat<S>::Identity(d, d)) throw Error(ErrorCode::Mismatch, "unit does not act as identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (act(h.mul(h.basis(i), h.basis(j))) != mod.action[static_cast<std::size_t>(j)] * mod.action[static_cast<std::size_t>(i)])
        throw Error(ErrorCode::Mismatch, "action is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int k = 0; k < d; ++k) {
    Mat<S> right(n, d);
    for (int j = 0; j < d; ++j) right.col(j) = h.mul(basis.col(j), basis.col(k));
    if (act(basis.col(k)) != coords_of_columns(mod.hs, right))
      throw Error(ErrorCode::Mismatch, "restriction to H_s is not right multiplication");
  }
  return mod;
}

template <class S>
IntegralModule<S> integral_module(const WeakHopfAlgebra<S>& h, const Vec<S>& ell) {
  const int n = h.dim();
  const Subspace<S> hs = counital_subalgebras(h).Hs;
  const Mat<S> basis = hs.columns();
  const int d = hs.dim();
  // y -> ell y is injective on H_s for non-degenerate ell.
  Mat<S> ell_y(n, d);
  for (int j = 0; j < d; ++j) ell_y.col(j) = h.mul(ell, basis.col(j));
  if (rank(ell_y) != d) throw Error(ErrorCode::Degenerate, "ell does not separate H_s");
  IntegralModule<S> out;
  for (int i = 0; i < n; ++i) {
    Mat<S> act(d, d);
    for (int j = 0; j < d; ++j) {
      const auto sol = solve<S>(ell_y, h.mul(ell_y.col(j), h.basis(i)));
      if (!sol) throw Error(ErrorCode::Mismatch, "ell y h is not of the form ell y'");
      act.col(j) = sol->particular;
    }
    out.action.push_back(act);
  }
  const Vec<S> one = *hs.coordinates(h.unit());
  out.gamma = Vec<S>(n);
  for (int i = 0; i < n; ++i) out.gamma(i) = h.counit_of(basis * (out.action[static_cast<std::size_t>(i)] * one));
  return out;
}

template <class S>
InvertibleSearch<S> gamma_module_iso(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma1, const Vec<S>& gamma2) {
  const int n = h.dim();
  const Mat<S> eps1 = twisted_eps_s(h, gamma1);
  const Mat<S> eps2 = twisted_eps_s(h, gamma2);
  const Subspace<S> hs = counital_subalgebras(h).Hs;
  const Mat<S> basis = hs.columns();
  const int d = hs.dim();
  // v eps1(h) - eps2(h v) = 0 for every basis h, linear in the coordinates of v.
  Mat<S> system(static_cast<Eigen::Index>(n) * n, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i)
      system.block(static_cast<Eigen::Index>(i) * n, j, n, 1) =
          h.mul(basis.col(j), eps1.col(i)) - eps2 * h.mul(h.basis(i), basis.col(j));
  const Subspace<S> sol = kernel(system);
  auto res = find_invertible_in_span(h, hs, Mat<S>(basis * sol.columns()));
  if (res.decision == Decision::Undecided)
    throw Error(ErrorCode::Undecidable, "cannot decide whether an invertible intertwiner exists");
  return res;
}

template <class S>
Subspace<S> self_intertwiners(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  if (!is_dual_grouplike(h, gamma)) throw Error(ErrorCode::PreconditionUnmet, "functional is not group-like");
  const int n = h.dim();
  const Mat<S> eps = twisted_eps_s(h, gamma);
  const auto subs = counital_subalgebras(h);
  const Mat<S> basis = subs.Hs.columns();
  const int d = subs.Hs.dim();
  // eps(t y h) = t eps(y h) for all basis y of H_s and h of H
  Mat<S> system(static_cast<Eigen::Index>(d) * n * n, d);
  for (int c = 0; c < d; ++c) {
    const Vec<S> t = basis.col(c);
    Eigen::Index row = 0;
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < n; ++i, row += n) {
        const Vec<S> yh = h.mul(basis.col(j), h.basis(i));
        system.block(row, c, n, 1) = eps * h.mul(t, yh) - h.mul(t, eps * yh);
      }
  }
  const Subspace<S> out = Subspace<S>::span_columns(Mat<S>(basis * kernel(system).columns()));
  if (!(out == subs.ZcapHs)) throw Error(ErrorCode::Mismatch, "self-intertwiners differ from Z(H) cap H_s");
  if (out.dim() != counital_subalgebras(dualize(h)).HtCapHs.dim())
    throw Error(ErrorCode::Mismatch, "self-intertwiners differ in dimension from H_t* cap H_s*");
  return out;
}

template <class S>
TwistedIntegralSpaces<S> twisted_integral_spaces(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  const int n = h.dim();
  const Mat<S> et = twisted_eps_t(h, gamma);
  const Mat<S> es = twisted_eps_s(h, gamma);
  Mat<S> left(static_cast<Eigen::Index>(n) * n, n), right(static_cast<Eigen::Index>(n) * n, n);
  for (int i = 0; i < n; ++i) {
    const Vec<S> e = h.basis(i);
    left.middleRows(static_cast<Eigen::Index>(i) * n, n) = h.left_mult(e) - h.left_mult(et.col(i));
    right.middleRows(static_cast<Eigen::Index>(i) * n, n) = h.right_mult(e) - h.right_mult(es.col(i));
  }
  return {kernel(left), kernel(right)};
}

// ---------------------------------------------------------------- automorphisms

template <class S>
Mat<S> grouplike_automorphism(const WeakHopfAlgebra<S>& h, const Vec<S>& g) {
  if (!is_grouplike(h, g)) throw Error(ErrorCode::PreconditionUnmet, "element is not group-like");
  const int n = h.dim();
  const Vec<S> g_inv = h.invert_element(g);
  Mat<S> out(n, n);
  for (int i = 0; i < n; ++i) out.col(i) = h.mul(h.mul(g, h.basis(i)), g_inv);
  if (!check_wha_morphism(h, out).ok()) throw Error(ErrorCode::Mismatch, "conjugation is not an automorphism");
  return out;
}

template <class S>
Mat<S> dual_grouplike_automorphism(const WeakHopfAlgebra<S>& h, const Vec<S>& gamma) {
  if (!is_dual_grouplike(h, gamma)) throw Error(ErrorCode::PreconditionUnmet, "functional is not group-like");
  const int n = h.dim();
  const Vec<S> inv = h.dual_invert(gamma);
  Mat<S> out(n, n);
  for (int i = 0; i < n; ++i) out.col(i) = lact(h, gamma, ract(h, h.basis(i), inv));
  if (!check_wha_morphism(h, out).ok()) throw Error(ErrorCode::Mismatch, "conjugation is not an automorphism");
  return out;
}

template <class S>
InvertibleSearch<S> is_trivial_automorphism(const WeakHopfAlgebra<S>& h, const Mat<S>& phi) {
  const int n = h.dim();
  const auto subs = counital_subalgebras(h);
  const auto maps = counital_maps(h);
  // Trivial group-likes S(y)y^-1 lie in H_s S(H_s), which is contained in H_min.
  const Mat<S> basis = subs.Hmin.columns();
  const int d = subs.Hmin.dim();
  // phi(e_i) u - u e_i = 0, eps_t(u) = 1, eps_s(u) = 1
  Mat<S> system(static_cast<Eigen::Index>(n) * n + 2 * n, d);
  Vec<S> rhs = Vec<S>::Zero(static_cast<Eigen::Index>(n) * n + 2 * n);
  for (int i = 0; i < n; ++i)
    system.middleRows(static_cast<Eigen::Index>(i) * n, n) = (h.left_mult(phi.col(i)) - h.right_mult(h.basis(i))) * basis;
  system.middleRows(static_cast<Eigen::Index>(n) * n, n) = maps.eps_t * basis;
  system.bottomRows(n) = maps.eps_s * basis;
  rhs.segment(static_cast<Eigen::Index>(n) * n, n) = h.unit();
  rhs.tail(n) = h.unit();
  InvertibleSearch<S> out;
  const auto sol = solve(system, rhs);
  if (!sol) return out;
  const Mat<S> dirs = sol->kernel.columns();
  bool undecided = false;
  auto visit = [&](const std::vector<int>& c) {
    Vec<S> coords = sol->particular;
    for (int i = 0; i < dirs.cols(); ++i)
      if (c[static_cast<std::size_t>(i)] != 0) coords += S(c[static_cast<std::size_t>(i)]) * dirs.col(i);
    const Vec<S> u = basis * coords;
    if (!is_grouplike(h, u)) return false;
    try {
      if (is_trivial_grouplike(h, u).decision != Decision::Yes) return false;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Undecidable) throw;
      undecided = true;
      return false;
    }
    out.witness = u;
    return true;
  };
  std::vector<int> zero(static_cast<std::size_t>(dirs.cols()), 0);
  if (visit(zero) || (dirs.cols() > 0 && enumerate_by_height(static_cast<int>(dirs.cols()), max_search_height(), visit))) {
    out.decision = Decision::Yes;
    return out;
  }
  out.decision = (dirs.cols() > 0 || undecided) ? Decision::Undecided : Decision::No;
  return out;
}

template <class S>
AntipodeOrder antipode_order_report(const WeakHopfAlgebra<S>& h, int bound) {
  AntipodeOrder out;
  out.bound = bound;
  const Mat<S> s2 = h.antipode() * h.antipode();
  const Mat<S> s4 = s2 * s2;
  Mat<S> power = s4;
  for (int k = 1; k <= bound; ++k, power = power * s4) {
    const auto r = is_trivial_automorphism(h, power);
    if (r.decision == Decision::Yes) {
      out.order = k;
      return out;
    }
    if (r.decision == Decision::Undecided) out.undecided_seen = true;
  }
  return out;
}

#define WHOPF_INSTANTIATE_GROUPLIKES(S)                                                                              \
  template InvertibleSearch<S> find_invertible_in_span<S>(const WeakHopfAlgebra<S>&, const Subspace<S>&,            \
                                                          const Mat<S>&);                                             \
  template bool is_grouplike<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                                           \
  template bool in_g1_dual<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                                             \
  template bool in_g2_dual<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                                             \
  template bool is_dual_grouplike<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                                      \
  template InvertibleSearch<S> is_trivial_grouplike<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                   \
  template bool coset_equal<S>(const WeakHopfAlgebra<S>&, const Vec<S>&, const Vec<S>&);                             \
  template DistinguishedPair<S> distinguished_pair<S>(const WeakHopfAlgebra<S>&, const DualPair<S>&);                \
  template ValidationReport radford_check<S>(const WeakHopfAlgebra<S>&, const DistinguishedPair<S>&);                \
  template ValidationReport lambda_ell_relations<S>(const WeakHopfAlgebra<S>&, const DistinguishedPair<S>&);         \
  template Mat<S> twisted_eps_s<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                                        \
  template Mat<S> twisted_eps_t<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                                        \
  template GammaModule<S> gamma_module<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                                 \
  template IntegralModule<S> integral_module<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                           \
  template InvertibleSearch<S> gamma_module_iso<S>(const WeakHopfAlgebra<S>&, const Vec<S>&, const Vec<S>&);         \
  template Subspace<S> self_intertwiners<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                               \
  template TwistedIntegralSpaces<S> twisted_integral_spaces<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);            \
  template Mat<S> grouplike_automorphism<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                               \
  template Mat<S> dual_grouplike_automorphism<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                          \
  template InvertibleSearch<S> is_trivial_automorphism<S>(const WeakHopfAlgebra<S>&, const Mat<S>&);                 \
  template AntipodeOrder antipode_order_report<S>(const WeakHopfAlgebra<S>&, int);

WHOPF_INSTANTIATE_GROUPLIKES(Rational)
WHOPF_INSTANTIATE_GROUPLIKES(Cyclotomic)

}  // namespace whopf
