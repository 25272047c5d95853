#include "whopf/twisting.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "whopf/constructors.hpp"
#include "whopf/error.hpp"
#include "whopf/grouplikes.hpp"
#include "whopf/integrals.hpp"
#include "whopf/semisimplicity.hpp"

namespace whopf {

namespace {

template <class S>
std::string first_nonzero(const Mat<S>& r) {
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      if (!is_zero(r(i, j)))
        return "coefficient (" + std::to_string(i) + "," + std::to_string(j) + "): " + FieldOps<S>::format(r(i, j));
  return "0";
}

template <class S>
std::string first_nonzero3(const Tensor3<S>& a, const Tensor3<S>& b) {
  Tensor3<S> d = a;
  for (const auto& [k, v] : b) {
    d[k] -= v;
    if (is_zero(d[k])) d.erase(k);
  }
  for (const auto& [k, v] : d)
    if (!is_zero(v))
      return "coefficient (" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) +
             "): " + FieldOps<S>::format(v);
  return "0";
}

// Same algebra, unit and labels; comultiplication, counit and antipode replaced.
template <class S>
WeakHopfAlgebra<S> with_coalgebra(const WeakHopfAlgebra<S>& h, const std::vector<Mat<S>>& comul, const Vec<S>& counit,
                                  const std::optional<Mat<S>>& antipode) {
  const int n = h.dim();
  WeakHopfAlgebra<S> out(h.field(), h.labels());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : h.product_terms(i, j)) out.add_mult(i, j, k, v);
  for (int i = 0; i < n; ++i)
    for (const auto& t : tensor_terms(comul[static_cast<std::size_t>(i)])) out.add_comult(i, t.a, t.b, t.v);
  out.set_unit(h.unit());
  out.set_counit(counit);
  if (antipode) out.set_antipode(*antipode);
  out.metadata() = h.metadata();
  return out;
}

std::string failed_checks(const ValidationReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += (out.empty() ? "" : "; ") + c.name + " (" + c.residual + ")";
  return out;
}

template <class S>
std::string name_of(const WeakHopfAlgebra<S>& h) {
  const auto it = h.metadata().find("name");
  return it == h.metadata().end() ? "H" : it->second;
}

}  // namespace

// ---------------------------------------------------------------- H_q

template <class S>
WeakHopfAlgebra<S> deform_q(const WeakHopfAlgebra<S>& h, const Vec<S>& q) {
  const int n = h.dim();
  const auto subs = counital_subalgebras(h);
  if (!subs.Ht.contains(q)) throw Error(ErrorCode::PreconditionUnmet, "q is not in H_t");
  if (!h.is_invertible(q)) throw Error(ErrorCode::PreconditionUnmet, "q is not invertible");
  const Mat<S>& s = h.antipode();
  if (s * s * q != q) throw Error(ErrorCode::PreconditionUnmet, "S^2(q) != q");
  Vec<S> norm = Vec<S>::Zero(n);
  for (const auto& t : tensor_terms(h.delta_one())) norm += t.v * h.mul(h.mul(s.col(t.a), q), h.basis(t.b));
  if (norm != h.unit()) throw Error(ErrorCode::PreconditionUnmet, "S(1(1)) q 1(2) != 1");
  const Vec<S> q_inv = h.invert_element(q);
  const Mat<S> one_q = h.unit() * q.transpose();
  std::vector<Mat<S>> comul;
  for (int i = 0; i < n; ++i) comul.push_back(h.mul_tensor(h.comul(h.basis(i)), one_q));
  const Vec<S> counit = h.right_mult(q_inv).transpose() * h.counit();
  const Mat<S> anti = h.left_mult(q_inv) * h.right_mult(q) * s;
  WeakHopfAlgebra<S> out = with_coalgebra(h, comul, counit, std::optional<Mat<S>>(anti));
  out.metadata()["name"] = name_of(h) + "_q";
  const ValidationReport rep = validate(out);
  if (!rep.ok()) throw Error(ErrorCode::Mismatch, "deformed algebra fails: " + failed_checks(rep));
  return out;
}

template <class S>
Regularized<S> regularize(const WeakHopfAlgebra<S>& h) {
  if (is_regular(h)) return {h, h.unit()};
  const MinimalData<S> md = minimal_data(h);
  Regularized<S> out{deform_q(h, md.g_inverse), md.g_inverse};
  if (!is_regular(out.algebra)) throw Error(ErrorCode::Mismatch, "deformation by g^-1 is not regular");
  out.algebra.metadata()["name"] = "regularize(" + name_of(h) + ")";
  return out;
}

// ---------------------------------------------------------------- twists

template <class S>
ValidationReport check_twist(const WeakHopfAlgebra<S>& h, const Twist<S>& t) {
  const int n = h.dim();
  const Mat<S> d1 = h.delta_one();
  ValidationReport rep;
  AxiomCheck left("theta_in_delta1_left"), right("theta_bar_in_delta1_right"), prod("theta_theta_bar_is_delta1"),
      coassoc("twisted_coassociativity");
  auto check = [](AxiomCheck& c, const Mat<S>& r) {
    if (!is_zero_matrix(r)) {
      c.passed = false;
      c.residual = first_nonzero(r);
    }
  };
  check(left, Mat<S>(h.mul_tensor(d1, t.theta) - t.theta));
  check(right, Mat<S>(h.mul_tensor(t.theta_bar, d1) - t.theta_bar));
  check(prod, Mat<S>(h.mul_tensor(t.theta, t.theta_bar) - d1));
  std::vector<Mat<S>> comul;
  for (int i = 0; i < n; ++i) comul.push_back(h.mul_tensor(h.mul_tensor(t.theta_bar, h.comul(h.basis(i))), t.theta));
  const WeakHopfAlgebra<S> tmp = with_coalgebra(h, comul, h.counit(), std::optional<Mat<S>>());
  for (int i = 0; i < n && coassoc.passed; ++i) {
    const Mat<S>& x = comul[static_cast<std::size_t>(i)];
    const Tensor3<S> l = tmp.comul_left(x), r = tmp.comul_right(x);
    if (l != r) {
      coassoc.passed = false;
      coassoc.witness = {i};
      coassoc.residual = first_nonzero3(l, r);
    }
  }
  rep.checks = {left, right, prod, coassoc};
  return rep;
}

template <class S>
Vec<S> twist_v(const WeakHopfAlgebra<S>& h, const Twist<S>& t) {
  Vec<S> v = Vec<S>::Zero(h.dim());
  for (const auto& term : tensor_terms(t.theta)) v += term.v * h.mul(h.antipode().col(term.a), h.basis(term.b));
  return v;
}

template <class S>
WeakHopfAlgebra<S> twist(const WeakHopfAlgebra<S>& h, const Twist<S>& t) {
  const int n = h.dim();
  const ValidationReport pre = check_twist(h, t);
  if (!pre.ok()) throw Error(ErrorCode::NotATwist, failed_checks(pre));
  const Mat<S>& s = h.antipode();
  const Vec<S> v = twist_v(h, t);
  Vec<S> v_inv = Vec<S>::Zero(n);
  for (const auto& term : tensor_terms(t.theta_bar)) v_inv += term.v * h.mul(h.basis(term.a), s.col(term.b));
  if (h.mul(v, v_inv) != h.unit() || h.mul(v_inv, v) != h.unit())
    throw Error(ErrorCode::VNotInvertible, "S(theta(1)) theta(2) is not inverted by theta_bar(1) S(theta_bar(2))");
  std::vector<Mat<S>> comul;
  for (int i = 0; i < n; ++i) comul.push_back(h.mul_tensor(h.mul_tensor(t.theta_bar, h.comul(h.basis(i))), t.theta));
  const Mat<S> anti = h.left_mult(v_inv) * h.right_mult(v) * s;
  WeakHopfAlgebra<S> out = with_coalgebra(h, comul, h.counit(), std::optional<Mat<S>>(anti));
  out.metadata()["name"] = "twist(" + name_of(h) + ")";
  const ValidationReport rep = validate(out);
  if (!rep.ok()) throw Error(ErrorCode::NotATwist, "twisted algebra fails: " + failed_checks(rep));
  // eps_t(h) = eps(theta(1) h) theta(2), eps_s(h) = theta_bar(1) eps(h theta_bar(2))
  Mat<S> et = Mat<S>::Zero(n, n), es = Mat<S>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& term : tensor_terms(t.theta))
      et.col(i) += (term.v * h.counit_of(h.mul(h.basis(term.a), h.basis(i)))) * h.basis(term.b);
    for (const auto& term : tensor_terms(t.theta_bar))
      es.col(i) += (term.v * h.counit_of(h.mul(h.basis(i), h.basis(term.b)))) * h.basis(term.a);
  }
  const auto maps = counital_maps(out);
  if (maps.eps_t != et) throw Error(ErrorCode::Mismatch, "target counital map differs from eps(theta(1) h) theta(2)");
  if (maps.eps_s != es) throw Error(ErrorCode::Mismatch, "source counital map differs from theta_bar(1) eps(h theta_bar(2))");
  return out;
}

// ---------------------------------------------------------------- dynamical twists

template <class S>
std::vector<std::vector<int>> group_table(const WeakHopfAlgebra<S>& u, const std::vector<Vec<S>>& a) {
  const std::size_t m = a.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec<S> p = u.mul(a[i], a[j]);
      for (std::size_t k = 0; k < m; ++k)
        if (a[k] == p) table[i][j] = static_cast<int>(k);
      if (table[i][j] < 0) throw Error(ErrorCode::PreconditionUnmet, "group elements are not closed under multiplication");
    }
  return table;
}

CharacterGroup character_group(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  int identity = -1;
  for (int i = 0; i < m && identity < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < m; ++j) ok = ok && table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == j;
    if (ok) identity = i;
  }
  if (identity < 0) throw Error(ErrorCode::PreconditionUnmet, "group has no identity");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw Error(ErrorCode::PreconditionUnmet, "group is not commutative");
  // Exponent: lcm of element orders.
  CharacterGroup chars;
  for (int i = 0; i < m; ++i) {
    int order = 1;
    for (int p = i; p != identity; p = table[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)]) ++order;
    chars.exponent = std::lcm(chars.exponent, order);
  }
  const int e = chars.exponent;
  std::vector<int> assign(static_cast<std::size_t>(m), -1);
  std::function<void(int)> extend = [&](int pos) {
    if (pos == m) {
      chars.powers.push_back(assign);
      return;
    }
    for (int k = 0; k < e; ++k) {
      if (pos == identity && k != 0) break;
      assign[static_cast<std::size_t>(pos)] = k;
      bool ok = true;
      for (int x = 0; x <= pos && ok; ++x)
        for (int y = 0; y <= pos && ok; ++y) {
          const int xy = table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
          if (xy <= pos)
            ok = (assign[static_cast<std::size_t>(x)] + assign[static_cast<std::size_t>(y)]) % e == assign[static_cast<std::size_t>(xy)];
        }
      if (ok) extend(pos + 1);
    }
    assign[static_cast<std::size_t>(pos)] = -1;
  };
  extend(0);
  if (static_cast<int>(chars.powers.size()) != m)
    throw Error(ErrorCode::PreconditionUnmet, "character count differs from the group order");
  const int c = chars.size();
  chars.sum.assign(static_cast<std::size_t>(c), std::vector<int>(static_cast<std::size_t>(c), -1));
  for (int l = 0; l < c; ++l)
    for (int mu = 0; mu < c; ++mu) {
      std::vector<int> s(static_cast<std::size_t>(m));
      for (int a = 0; a < m; ++a)
        s[static_cast<std::size_t>(a)] = (chars.powers[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)] +
                                          chars.powers[static_cast<std::size_t>(mu)][static_cast<std::size_t>(a)]) % e;
      for (int k = 0; k < c; ++k)
        if (chars.powers[static_cast<std::size_t>(k)] == s) chars.sum[static_cast<std::size_t>(l)][static_cast<std::size_t>(mu)] = k;
    }
  return chars;
}

template <class S>
S character_value(const FieldSpec& field, const CharacterGroup& chars, int lambda, int a) {
  const int k = chars.powers[static_cast<std::size_t>(lambda)][static_cast<std::size_t>(a)];
  if (k == 0) return S(1);
  const S zeta = FieldOps<S>::root_of_unity(field, chars.exponent);
  S out(1);
  for (int i = 0; i < k; ++i) out = out * zeta;
  return out;
}

template <class S>
std::vector<Vec<S>> character_idempotents(const DynamicalTwistData<S>& d, const CharacterGroup& chars) {
  const int m = static_cast<int>(d.group.size());
  const auto table = group_table(d.u, d.group);
  std::vector<int> inverse(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (d.group[static_cast<std::size_t>(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])] == d.u.unit())
        inverse[static_cast<std::size_t>(a)] = b;
  std::vector<Vec<S>> out;
  const S scale = S(1) / S(m);
  for (int mu = 0; mu < chars.size(); ++mu) {
    Vec<S> p = Vec<S>::Zero(d.u.dim());
    for (int a = 0; a < m; ++a)
      p += character_value<S>(d.u.field(), chars, mu, inverse[static_cast<std::size_t>(a)]) * d.group[static_cast<std::size_t>(a)];
    out.push_back(p * scale);
  }
  return out;
}

namespace {

// Flattened U (x) U element as a vector of the tensor product algebra.
template <class S>
Vec<S> flatten(const Mat<S>& x) {
  const Eigen::Index n = x.rows();
  Vec<S> v(n * n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) v(a * n + b) = x(a, b);
  return v;
}

template <class S>
Mat<S> unflatten(const Vec<S>& v, Eigen::Index n) {
  Mat<S> x(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) x(a, b) = v(a * n + b);
  return x;
}

template <class S>
Tensor3<S> tensor3_of(const Mat<S>& x12, int third_index_leg, const WeakHopfAlgebra<S>& u) {
  // x12 placed on legs (1,2) with 1 on leg 3 (third_index_leg = 3), or on legs (2,3) with 1 on leg 1.
  Tensor3<S> out;
  for (const auto& t : tensor_terms(x12))
    for (int k = 0; k < u.dim(); ++k) {
      if (is_zero(u.unit()(k))) continue;
      const std::array<int, 3> key = third_index_leg == 3 ? std::array<int, 3>{t.a, t.b, k} : std::array<int, 3>{k, t.a, t.b};
      out[key] += t.v * u.unit()(k);
    }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

template <class S>
CharacterGroup check_dynamical_data(const DynamicalTwistData<S>& d) {
  const WeakHopfAlgebra<S>& u = d.u;
  const int n = u.dim();
  if (counital_subalgebras(u).Ht.dim() != 1) throw Error(ErrorCode::PreconditionUnmet, "U is not a Hopf algebra (H_t != k1)");
  for (const auto& a : d.group)
    if (!is_grouplike(u, a)) throw Error(ErrorCode::PreconditionUnmet, "an element of A is not group-like");
  for (std::size_t i = 0; i < d.group.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (d.group[i] == d.group[j]) throw Error(ErrorCode::PreconditionUnmet, "A lists an element twice");
  const CharacterGroup chars = character_group(group_table(u, d.group));
  if (chars.exponent > 2 && !(u.field().kind == FieldKind::Cyclotomic && u.field().order % chars.exponent == 0))
    throw Error(ErrorCode::FieldTooSmall, "characters need a primitive " + std::to_string(chars.exponent) + "-th root of unity");
  if (static_cast<int>(d.j.size()) != chars.size())
    throw Error(ErrorCode::PreconditionUnmet, "J must have one value per character");
  const WeakHopfAlgebra<S> uu = tensor_product(u, u);
  const std::vector<Vec<S>> p = character_idempotents(d, chars);
  for (int l = 0; l < chars.size(); ++l) {
    const Mat<S>& j = d.j[static_cast<std::size_t>(l)];
    const std::string at = " at character " + std::to_string(l);
    if (!uu.is_invertible(flatten(j))) throw Error(ErrorCode::NotInvertible, "J is not invertible" + at);
    for (const auto& a : d.group) {
      const Mat<S> da = u.comul(a);
      if (u.mul_tensor(j, da) != u.mul_tensor(da, j)) throw Error(ErrorCode::PreconditionUnmet, "J does not commute with Delta(A)" + at);
    }
    if (Vec<S>(j.transpose() * u.counit()) != u.unit() || Vec<S>(j * u.counit()) != u.unit())
      throw Error(ErrorCode::PreconditionUnmet, "J is not normalized" + at);
    // (Delta (x) id)J(l) * sum_mu J(l + mu) (x) P_mu = (id (x) Delta)J(l) * (1 (x) J(l))
    Tensor3<S> shifted;
    for (int mu = 0; mu < chars.size(); ++mu)
      for (const auto& t : tensor_terms(d.j[static_cast<std::size_t>(chars.sum[static_cast<std::size_t>(l)][static_cast<std::size_t>(mu)])]))
        for (int k = 0; k < n; ++k)
          if (!is_zero(p[static_cast<std::size_t>(mu)](k))) shifted[{t.a, t.b, k}] += t.v * p[static_cast<std::size_t>(mu)](k);
    for (auto it = shifted.begin(); it != shifted.end();)
      it = is_zero(it->second) ? shifted.erase(it) : std::next(it);
    const Tensor3<S> lhs = u.mul_tensor3(u.comul_left(j), shifted);
    const Tensor3<S> rhs = u.mul_tensor3(u.comul_right(j), tensor3_of(j, 1, u));
    if (lhs != rhs) throw Error(ErrorCode::DynamicalEquationViolated, "character " + std::to_string(l) + ": " + first_nonzero3(lhs, rhs));
  }
  return chars;
}

template <class S>
DynamicalTwistData<S> trivial_dynamical_data(const WeakHopfAlgebra<S>& u, const std::vector<Vec<S>>& group) {
  DynamicalTwistData<S> d{u, group, {}};
  const Mat<S> one = u.unit() * u.unit().transpose();
  d.j.assign(group.size(), one);
  return d;
}

template <class S>
DynamicalTwistData<S> gauge_dynamical_data(const WeakHopfAlgebra<S>& u, const std::vector<Vec<S>>& group,
                                           const std::vector<std::vector<S>>& xi_in) {
  DynamicalTwistData<S> d{u, group, {}};
  const CharacterGroup chars = character_group(group_table(u, group));
  const int c = chars.size();
  auto xi = [&](int l, int mu) {
    if (mu == 0) return S(1);
    const S& v = xi_in.at(static_cast<std::size_t>(l)).at(static_cast<std::size_t>(mu));
    if (is_zero(v)) throw Error(ErrorCode::InvalidArgument, "gauge function must be nonzero");
    return v;
  };
  const std::vector<Vec<S>> p = character_idempotents(d, chars);
  for (int l = 0; l < c; ++l) {
    Mat<S> j = Mat<S>::Zero(u.dim(), u.dim());
    for (int mu = 0; mu < c; ++mu)
      for (int nu = 0; nu < c; ++nu) {
        const auto& sum = chars.sum;
        const S coeff = xi(l, sum[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]) /
                        (xi(sum[static_cast<std::size_t>(l)][static_cast<std::size_t>(nu)], mu) * xi(l, nu));
        j += coeff * (p[static_cast<std::size_t>(mu)] * p[static_cast<std::size_t>(nu)].transpose());
      }
    d.j.push_back(j);
  }
  return d;
}

template <class S>
WeakHopfAlgebra<S> dynamical_host(const DynamicalTwistData<S>& d) {
  return tensor_product(matrix_wha<S>(static_cast<int>(d.group.size()), d.u.field()), d.u);
}

template <class S>
DynamicalTwist<S> dynamical_theta(const DynamicalTwistData<S>& d) {
  const CharacterGroup chars = check_dynamical_data(d);
  const WeakHopfAlgebra<S> uu = tensor_product(d.u, d.u);
  DynamicalTwist<S> out{dynamical_host(d), {}, chars};
  const int m = chars.size();
  const int du = d.u.dim();
  const int n = out.host.dim();
  auto idx = [m, du](int row, int col, int x) { return (row * m + col) * du + x; };
  const std::vector<Vec<S>> p = character_idempotents(d, chars);
  out.twist.theta = Mat<S>::Zero(n, n);
  out.twist.theta_bar = Mat<S>::Zero(n, n);
  for (int l = 0; l < m; ++l) {
    const Mat<S>& j = d.j[static_cast<std::size_t>(l)];
    const Mat<S> j_inv = unflatten<S>(uu.invert_element(flatten(j)), du);
    for (int mu = 0; mu < m; ++mu) {
      const int shifted = chars.sum[static_cast<std::size_t>(l)][static_cast<std::size_t>(mu)];
      const Vec<S>& pm = p[static_cast<std::size_t>(mu)];
      // E_{l,l+mu} J1(l) (x) E_{ll} J2(l) P_mu
      for (const auto& t : tensor_terms(j)) {
        const Vec<S> second = d.u.mul(d.u.basis(t.b), pm);
        for (int x = 0; x < du; ++x)
          if (!is_zero(second(x))) out.twist.theta(idx(l, shifted, t.a), idx(l, l, x)) += t.v * second(x);
      }
      // E_{l+mu,l} J^-1(1)(l) (x) E_{ll} P_mu J^-1(2)(l)
      for (const auto& t : tensor_terms(j_inv)) {
        const Vec<S> second = d.u.mul(pm, d.u.basis(t.b));
        for (int x = 0; x < du; ++x)
          if (!is_zero(second(x))) out.twist.theta_bar(idx(shifted, l, t.a), idx(l, l, x)) += t.v * second(x);
      }
    }
  }
  const ValidationReport rep = check_twist(out.host, out.twist);
  if (!rep.ok()) throw Error(ErrorCode::NotATwist, "dynamical theta: " + failed_checks(rep));
  return out;
}

template <class S>
bool DynamicalReport<S>::ok() const {
  if (!blocks) return false;
  for (const auto& b : *blocks)
    if (!(b.trace_g == S(b.degree)) || !(b.trace_g_inv == S(b.degree))) return false;
  return tr_s2_direct == S(dim) && target_base_dim == source_base_dim && biconnected && dual_semisimple_by_trace_criterion &&
         dual_semisimple_by_maschke && dual_semisimple_by_trace_form;
}

template <class S>
DynamicalReport<S> dynamical_cosemisimplicity_check(const DynamicalTwistData<S>& d) {
  if (!maschke(d.u).semisimple) throw Error(ErrorCode::PreconditionUnmet, "U is not semisimple");
  const DynamicalTwist<S> dt = dynamical_theta(d);
  const WeakHopfAlgebra<S>& host = dt.host;
  const WeakHopfAlgebra<S> ht = twist(host, dt.twist);
  DynamicalReport<S> r;
  r.dim = ht.dim();
  r.tr_s2_direct = trace<S>(Mat<S>(ht.antipode() * ht.antipode()));
  // g = S(v)^-1 v with S_Theta^2 = Ad(g^-1)
  const Vec<S> v = twist_v(host, dt.twist);
  const Vec<S> g = host.mul(host.invert_element(host.apply_S(v)), v);
  const Vec<S> g_inv = host.invert_element(g);
  try {
    std::vector<BlockCharacterTrace<S>> blocks;
    for (const Vec<S>& z : primitive_idempotents(host, center(host))) {
      const Mat<S> lz = host.left_mult(z);
      const int block_dim = rank(lz);
      const int deg = static_cast<int>(std::lround(std::sqrt(static_cast<double>(block_dim))));
      if (deg * deg != block_dim) throw Error(ErrorCode::NonSplit, "block is not a full matrix algebra");
      blocks.push_back({deg, trace<S>(Mat<S>(host.left_mult(g) * lz)) / S(deg),
                        trace<S>(Mat<S>(host.left_mult(g_inv) * lz)) / S(deg)});
    }
    r.blocks = blocks;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonSplit) throw;
  }
  const auto subs = counital_subalgebras(ht);
  r.target_base_dim = subs.Ht.dim();
  r.source_base_dim = subs.Hs.dim();
  r.biconnected = connectedness(ht).biconnected;
  r.regular = is_regular(ht);
  r.dual_semisimple_by_trace_criterion = r.biconnected && r.regular && !is_zero(r.tr_s2_direct);
  const WeakHopfAlgebra<S> dual = dualize(ht);
  r.dual_semisimple_by_maschke = maschke(dual).semisimple;
  r.dual_semisimple_by_trace_form = trace_form_semisimple(dual);
  return r;
}

#define WHOPF_INSTANTIATE_TWISTING(S)                                                                          \
  template WeakHopfAlgebra<S> deform_q<S>(const WeakHopfAlgebra<S>&, const Vec<S>&);                           \
  template Regularized<S> regularize<S>(const WeakHopfAlgebra<S>&);                                            \
  template ValidationReport check_twist<S>(const WeakHopfAlgebra<S>&, const Twist<S>&);                        \
  template Vec<S> twist_v<S>(const WeakHopfAlgebra<S>&, const Twist<S>&);                                      \
  template WeakHopfAlgebra<S> twist<S>(const WeakHopfAlgebra<S>&, const Twist<S>&);                            \
  template std::vector<std::vector<int>> group_table<S>(const WeakHopfAlgebra<S>&, const std::vector<Vec<S>>&); \
  template S character_value<S>(const FieldSpec&, const CharacterGroup&, int, int);                            \
  template std::vector<Vec<S>> character_idempotents<S>(const DynamicalTwistData<S>&, const CharacterGroup&);  \
  template CharacterGroup check_dynamical_data<S>(const DynamicalTwistData<S>&);                               \
  template DynamicalTwistData<S> trivial_dynamical_data<S>(const WeakHopfAlgebra<S>&, const std::vector<Vec<S>>&); \
  template DynamicalTwistData<S> gauge_dynamical_data<S>(const WeakHopfAlgebra<S>&, const std::vector<Vec<S>>&, \
                                                         const std::vector<std::vector<S>>&);                  \
  template WeakHopfAlgebra<S> dynamical_host<S>(const DynamicalTwistData<S>&);                                 \
  template DynamicalTwist<S> dynamical_theta<S>(const DynamicalTwistData<S>&);                                 \
  template struct DynamicalReport<S>;                                                                          \
  template DynamicalReport<S> dynamical_cosemisimplicity_check<S>(const DynamicalTwistData<S>&);

WHOPF_INSTANTIATE_TWISTING(Rational)
WHOPF_INSTANTIATE_TWISTING(Cyclotomic)

}  // namespace whopf
