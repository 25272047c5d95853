#include "whopf/wha.hpp"

#include <algorithm>
#include <sstream>

namespace whopf {

namespace {

template <class S>
void accumulate(std::vector<std::pair<int, S>>& slot, int k, const S& v) {
  auto it = std::lower_bound(slot.begin(), slot.end(), k, [](const auto& e, int key) { return e.first < key; });
  if (it != slot.end() && it->first == k) {
    it->second += v;
    if (is_zero(it->second)) slot.erase(it);
  } else if (!is_zero(v)) {
    slot.insert(it, {k, v});
  }
}

template <class S>
std::string describe_vector_residual(const Vec<S>& r) {
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (!is_zero(r(i))) return "coefficient " + std::to_string(i) + ": " + FieldOps<S>::format(r(i));
  return "0";
}

template <class S>
std::string describe_matrix_residual(const Mat<S>& r) {
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      if (!is_zero(r(i, j)))
        return "coefficient (" + std::to_string(i) + "," + std::to_string(j) + "): " + FieldOps<S>::format(r(i, j));
  return "0";
}

template <class S>
std::string describe_tensor3_residual(const Tensor3<S>& a, const Tensor3<S>& b) {
  for (const auto& [key, v] : a) {
    auto it = b.find(key);
    const S d = it == b.end() ? v : v - it->second;
    if (!is_zero(d))
      return "coefficient (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," + std::to_string(key[2]) +
             "): " + FieldOps<S>::format(d);
  }
  for (const auto& [key, v] : b)
    if (!a.count(key))
      return "coefficient (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," + std::to_string(key[2]) +
             "): " + FieldOps<S>::format(-v);
  return "0";
}

template <class S>
void add3(Tensor3<S>& t, const std::array<int, 3>& key, const S& v) {
  if (is_zero(v)) return;
  auto [it, inserted] = t.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (is_zero(it->second)) t.erase(it);
  }
}

// Records the first failure only.
void fail(AxiomCheck& check, std::vector<int> witness, std::string residual) {
  if (!check.passed) return;
  check.passed = false;
  check.witness = std::move(witness);
  check.residual = std::move(residual);
}

}  // namespace

// ---------------------------------------------------------------- WeakHopfAlgebra

template <class S>
WeakHopfAlgebra<S>::WeakHopfAlgebra(FieldSpec field, std::vector<std::string> labels)
    : field_(field),
      n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      mult_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)),
      comult_(static_cast<std::size_t>(n_)),
      unit_(Vec<S>::Zero(n_)),
      counit_(Vec<S>::Zero(n_)) {}

template <class S>
void WeakHopfAlgebra<S>::add_mult(int i, int j, int k, const S& v) {
  accumulate(mult_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)], k, v);
}

template <class S>
void WeakHopfAlgebra<S>::add_comult(int i, int j, int k, const S& v) {
  auto& slot = comult_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(slot.begin(), slot.end(), std::make_pair(j, k),
                             [](const Term2<S>& t, const std::pair<int, int>& key) {
                               return std::make_pair(t.a, t.b) < key;
                             });
  if (it != slot.end() && it->a == j && it->b == k) {
    it->v += v;
    if (is_zero(it->v)) slot.erase(it);
  } else if (!is_zero(v)) {
    slot.insert(it, Term2<S>{j, k, v});
  }
}

template <class S>
S WeakHopfAlgebra<S>::mult(int i, int j, int k) const {
  for (const auto& [kk, v] : product_terms(i, j))
    if (kk == k) return v;
  return S(0);
}

template <class S>
S WeakHopfAlgebra<S>::comult(int i, int j, int k) const {
  for (const auto& t : coproduct_terms(i))
    if (t.a == j && t.b == k) return t.v;
  return S(0);
}

template <class S>
const Mat<S>& WeakHopfAlgebra<S>::antipode() const {
  if (!antipode_) throw Error(ErrorCode::NoAntipode, "antipode has not been computed");
  return *antipode_;
}

template <class S>
Vec<S> WeakHopfAlgebra<S>::mul(const Element& a, const Element& b) const {
  Vec<S> r = Vec<S>::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (is_zero(a(i))) continue;
    for (int j = 0; j < n_; ++j) {
      if (is_zero(b(j))) continue;
      const S f = a(i) * b(j);
      for (const auto& [k, v] : product_terms(i, j)) r(k) += f * v;
    }
  }
  return r;
}

template <class S>
Mat<S> WeakHopfAlgebra<S>::left_mult(const Element& a) const {
  Mat<S> m = Mat<S>::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (is_zero(a(i))) continue;
    for (int j = 0; j < n_; ++j)
      for (const auto& [k, v] : product_terms(i, j)) m(k, j) += a(i) * v;
  }
  return m;
}

template <class S>
Mat<S> WeakHopfAlgebra<S>::right_mult(const Element& a) const {
  Mat<S> m = Mat<S>::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (is_zero(a(i))) continue;
    for (int j = 0; j < n_; ++j)
      for (const auto& [k, v] : product_terms(j, i)) m(k, j) += a(i) * v;
  }
  return m;
}

template <class S>
Mat<S> WeakHopfAlgebra<S>::comul(const Element& a) const {
  Mat<S> m = Mat<S>::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (is_zero(a(i))) continue;
    for (const auto& t : coproduct_terms(i)) m(t.a, t.b) += a(i) * t.v;
  }
  return m;
}

template <class S>
std::vector<Term2<S>> tensor_terms(const Mat<S>& x) {
  std::vector<Term2<S>> out;
  for (Eigen::Index a = 0; a < x.rows(); ++a)
    for (Eigen::Index b = 0; b < x.cols(); ++b)
      if (!is_zero(x(a, b))) out.push_back({static_cast<int>(a), static_cast<int>(b), x(a, b)});
  return out;
}

template <class S>
Mat<S> WeakHopfAlgebra<S>::mul_tensor(const Matrix& x, const Matrix& y) const {
  Mat<S> z = Mat<S>::Zero(n_, n_);
  const auto tx = tensor_terms(x), ty = tensor_terms(y);
  for (const auto& p : tx)
    for (const auto& q : ty) {
      const auto& first = product_terms(p.a, q.a);
      if (first.empty()) continue;
      const auto& second = product_terms(p.b, q.b);
      if (second.empty()) continue;
      const S f = p.v * q.v;
      for (const auto& [k, v1] : first)
        for (const auto& [l, v2] : second) z(k, l) += f * v1 * v2;
    }
  return z;
}

template <class S>
Tensor3<S> WeakHopfAlgebra<S>::mul_tensor3(const Tensor3<S>& x, const Tensor3<S>& y) const {
  Tensor3<S> z;
  for (const auto& [p, pv] : x)
    for (const auto& [q, qv] : y) {
      const auto& t0 = product_terms(p[0], q[0]);
      if (t0.empty()) continue;
      const auto& t1 = product_terms(p[1], q[1]);
      if (t1.empty()) continue;
      const auto& t2 = product_terms(p[2], q[2]);
      if (t2.empty()) continue;
      const S f = pv * qv;
      for (const auto& [a, v0] : t0)
        for (const auto& [b, v1] : t1)
          for (const auto& [c, v2] : t2) add3(z, {a, b, c}, f * v0 * v1 * v2);
    }
  return z;
}

template <class S>
Tensor3<S> WeakHopfAlgebra<S>::comul_left(const Matrix& x) const {
  Tensor3<S> t;
  for (const auto& p : tensor_terms(x))
    for (const auto& d : coproduct_terms(p.a)) add3(t, {d.a, d.b, p.b}, p.v * d.v);
  return t;
}

template <class S>
Tensor3<S> WeakHopfAlgebra<S>::comul_right(const Matrix& x) const {
  Tensor3<S> t;
  for (const auto& p : tensor_terms(x))
    for (const auto& d : coproduct_terms(p.b)) add3(t, {p.a, d.a, d.b}, p.v * d.v);
  return t;
}

template <class S>
Mat<S> WeakHopfAlgebra<S>::antipode_inverse() const {
  try {
    return invert(antipode());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::NoAntipodeInverse, "antipode is singular");
  }
}

template <class S>
bool WeakHopfAlgebra<S>::is_invertible(const Element& a) const {
  return rank(left_mult(a)) == n_;
}

template <class S>
Vec<S> WeakHopfAlgebra<S>::invert_element(const Element& a) const {
  auto sol = solve(left_mult(a), unit_);
  if (!sol || sol->kernel.dim() != 0) throw Error(ErrorCode::NotInvertible, "element is not invertible");
  if (mul(sol->particular, a) != unit_) throw Error(ErrorCode::NotInvertible, "element has no two-sided inverse");
  return sol->particular;
}

template <class S>
Vec<S> WeakHopfAlgebra<S>::dual_mul(const Functional& phi, const Functional& psi) const {
  Vec<S> r = Vec<S>::Zero(n_);
  for (int k = 0; k < n_; ++k)
    for (const auto& t : coproduct_terms(k))
      if (!is_zero(phi(t.a)) && !is_zero(psi(t.b))) r(k) += t.v * phi(t.a) * psi(t.b);
  return r;
}

namespace {

// Column j is phi * f_j in H*, where f_j is the dual basis.
template <class S>
Mat<S> dual_left_mult(const WeakHopfAlgebra<S>& h, const Vec<S>& phi) {
  const int n = h.dim();
  Mat<S> m = Mat<S>::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (const auto& t : h.coproduct_terms(k))
      if (!is_zero(phi(t.a))) m(k, t.b) += t.v * phi(t.a);
  return m;
}

}  // namespace

template <class S>
bool WeakHopfAlgebra<S>::dual_is_invertible(const Functional& phi) const {
  return rank(dual_left_mult(*this, phi)) == n_;
}

template <class S>
Vec<S> WeakHopfAlgebra<S>::dual_invert(const Functional& phi) const {
  auto sol = solve(dual_left_mult(*this, phi), counit_);
  if (!sol || sol->kernel.dim() != 0) throw Error(ErrorCode::NotInvertible, "functional is not invertible");
  return sol->particular;
}

template <class S>
bool WeakHopfAlgebra<S>::operator==(const WeakHopfAlgebra& o) const {
  if (!(field_ == o.field_) || n_ != o.n_ || unit_ != o.unit_ || counit_ != o.counit_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (mult(i, j, k) != o.mult(i, j, k) || comult(i, j, k) != o.comult(i, j, k)) return false;
  if (has_antipode() != o.has_antipode()) return false;
  return !has_antipode() || antipode() == o.antipode();
}

// ---------------------------------------------------------------- validation

template <class S>
ValidationReport validate_weak_bialgebra(const WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  ValidationReport report;

  AxiomCheck assoc{"associativity"};
  for (int i = 0; i < n && assoc.passed; ++i)
    for (int j = 0; j < n && assoc.passed; ++j) {
      const auto& ij = h.product_terms(i, j);
      for (int k = 0; k < n && assoc.passed; ++k) {
        Vec<S> lhs = Vec<S>::Zero(n), rhs = Vec<S>::Zero(n);
        for (const auto& [m, v] : ij)
          for (const auto& [l, w] : h.product_terms(m, k)) lhs(l) += v * w;
        for (const auto& [m, v] : h.product_terms(j, k))
          for (const auto& [l, w] : h.product_terms(i, m)) rhs(l) += v * w;
        if (lhs != rhs) fail(assoc, {i, j, k}, describe_vector_residual<S>(lhs - rhs));
      }
    }
  report.checks.push_back(assoc);

  AxiomCheck unit{"unit"};
  for (int i = 0; i < n && unit.passed; ++i) {
    const Vec<S> e = h.basis(i);
    const Vec<S> l = h.mul(h.unit(), e), r = h.mul(e, h.unit());
    if (l != e) fail(unit, {i}, describe_vector_residual<S>(l - e));
    else if (r != e) fail(unit, {i}, describe_vector_residual<S>(r - e));
  }
  report.checks.push_back(unit);

  AxiomCheck coassoc{"coassociativity"};
  for (int i = 0; i < n && coassoc.passed; ++i) {
    const Mat<S> d = h.comul(h.basis(i));
    const Tensor3<S> l = h.comul_left(d), r = h.comul_right(d);
    if (l != r) fail(coassoc, {i}, describe_tensor3_residual(l, r));
  }
  report.checks.push_back(coassoc);

  AxiomCheck counit{"counit"};
  for (int i = 0; i < n && counit.passed; ++i) {
    Vec<S> l = Vec<S>::Zero(n), r = Vec<S>::Zero(n);
    for (const auto& t : h.coproduct_terms(i)) {
      l(t.b) += h.counit()(t.a) * t.v;
      r(t.a) += h.counit()(t.b) * t.v;
    }
    const Vec<S> e = h.basis(i);
    if (l != e) fail(counit, {i}, describe_vector_residual<S>(l - e));
    else if (r != e) fail(counit, {i}, describe_vector_residual<S>(r - e));
  }
  report.checks.push_back(counit);

  AxiomCheck mult{"comultiplication_multiplicative"};
  {
    std::vector<Mat<S>> deltas;
    for (int i = 0; i < n; ++i) deltas.push_back(h.comul(h.basis(i)));
    for (int i = 0; i < n && mult.passed; ++i)
      for (int j = 0; j < n && mult.passed; ++j) {
        Mat<S> lhs = Mat<S>::Zero(n, n);
        for (const auto& [k, v] : h.product_terms(i, j)) lhs += v * deltas[static_cast<std::size_t>(k)];
        const Mat<S> rhs = h.mul_tensor(deltas[static_cast<std::size_t>(i)], deltas[static_cast<std::size_t>(j)]);
        if (lhs != rhs) fail(mult, {i, j}, describe_matrix_residual<S>(lhs - rhs));
      }
  }
  report.checks.push_back(mult);

  AxiomCheck weak_unit{"weak_unit"};
  {
    const Mat<S> d1 = h.delta_one();
    const Tensor3<S> lhs = h.comul_left(d1);
    Tensor3<S> left, right;
    for (const auto& p : tensor_terms(d1))
      for (const auto& q : tensor_terms(d1)) {
        for (const auto& [m, v] : h.product_terms(p.b, q.a)) add3(left, {p.a, m, q.b}, p.v * q.v * v);
        for (const auto& [m, v] : h.product_terms(q.a, p.b)) add3(right, {p.a, m, q.b}, p.v * q.v * v);
      }
    if (lhs != left) fail(weak_unit, {}, "(Delta(x)id)Delta(1) vs (Delta(1)(x)1)(1(x)Delta(1)): " +
                                             describe_tensor3_residual(lhs, left));
    else if (lhs != right)
      fail(weak_unit, {}, "(Delta(x)id)Delta(1) vs (1(x)Delta(1))(Delta(1)(x)1): " +
                              describe_tensor3_residual(lhs, right));
  }
  report.checks.push_back(weak_unit);

  AxiomCheck weak_counit{"weak_counit"};
  {
    Mat<S> b = Mat<S>::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [k, v] : h.product_terms(i, j)) b(i, j) += v * h.counit()(k);
    for (int g = 0; g < n && weak_counit.passed; ++g) {
      const Mat<S> c = h.right_mult(h.basis(g)).transpose() * b;
      const Mat<S> d = h.comul(h.basis(g));
      const Mat<S> first = b * d * b;
      const Mat<S> second = b * d.transpose() * b;
      for (int f = 0; f < n && weak_counit.passed; ++f)
        for (int k = 0; k < n && weak_counit.passed; ++k) {
          if (c(f, k) != first(f, k))
            fail(weak_counit, {f, g, k}, "eps(fgh) - eps(f g(1))eps(g(2) h) = " + FieldOps<S>::format(c(f, k) - first(f, k)));
          else if (c(f, k) != second(f, k))
            fail(weak_counit, {f, g, k},
                 "eps(fgh) - eps(f g(2))eps(g(1) h) = " + FieldOps<S>::format(c(f, k) - second(f, k)));
        }
    }
  }
  report.checks.push_back(weak_counit);
  return report;
}

template <class S>
CounitalMaps<S> counital_maps(const WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  Mat<S> b = Mat<S>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : h.product_terms(i, j)) b(i, j) += v * h.counit()(k);
  const Mat<S> d1 = h.delta_one();
  return {d1.transpose() * b, d1 * b.transpose()};
}

template <class S>
ValidationReport check_antipode(const WeakHopfAlgebra<S>& h, const Mat<S>& s) {
  const int n = h.dim();
  const CounitalMaps<S> cm = counital_maps(h);
  ValidationReport report;
  AxiomCheck target{"antipode_target"}, source{"antipode_source"}, sandwich{"antipode_sandwich"};
  for (int x = 0; x < n; ++x) {
    Vec<S> l = Vec<S>::Zero(n), r = Vec<S>::Zero(n);
    for (const auto& t : h.coproduct_terms(x)) {
      l += t.v * h.mul(h.basis(t.a), s.col(t.b));
      r += t.v * h.mul(s.col(t.a), h.basis(t.b));
    }
    if (l != cm.eps_t.col(x)) fail(target, {x}, describe_vector_residual<S>(l - cm.eps_t.col(x)));
    if (r != cm.eps_s.col(x)) fail(source, {x}, describe_vector_residual<S>(r - cm.eps_s.col(x)));
    if (sandwich.passed) {
      const Tensor3<S> t3 = h.comul_left(h.comul(h.basis(x)));
      Vec<S> z = Vec<S>::Zero(n);
      for (const auto& [key, v] : t3) z += v * h.mul(h.mul(s.col(key[0]), h.basis(key[1])), s.col(key[2]));
      if (z != s.col(x)) fail(sandwich, {x}, describe_vector_residual<S>(z - s.col(x)));
    }
  }
  report.checks = {target, source, sandwich};
  return report;
}

template <class S>
ValidationReport validate(const WeakHopfAlgebra<S>& h) {
  ValidationReport r = validate_weak_bialgebra(h);
  if (!h.has_antipode()) {
    AxiomCheck missing("antipode_present");
    fail(missing, {}, "no antipode");
    r.checks.push_back(missing);
    return r;
  }
  const ValidationReport a = check_antipode(h, h.antipode());
  r.checks.insert(r.checks.end(), a.checks.begin(), a.checks.end());
  return r;
}

template <class S>
Mat<S> solve_antipode(const WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  const CounitalMaps<S> cm = counital_maps(h);
  SparseLinearSystem<S> sys(n * n);
  auto var = [n](int i, int j) { return i * n + j; };  // S(i,j)
  std::vector<Mat<S>> right_by_target;
  for (int b = 0; b < n; ++b) right_by_target.push_back(h.right_mult(cm.eps_t.col(b)));

  for (int x = 0; x < n; ++x) {
    // h(1) S(h(2)) = eps_t(h)
    std::vector<std::map<int, S>> rows(static_cast<std::size_t>(n));
    for (const auto& t : h.coproduct_terms(x))
      for (int i = 0; i < n; ++i)
        for (const auto& [k, w] : h.product_terms(t.a, i)) rows[static_cast<std::size_t>(k)][var(i, t.b)] += t.v * w;
    for (int k = 0; k < n; ++k) sys.add_equation(std::move(rows[static_cast<std::size_t>(k)]), cm.eps_t(k, x));

    // S(h(1)) h(2) = eps_s(h)
    rows.assign(static_cast<std::size_t>(n), {});
    for (const auto& t : h.coproduct_terms(x))
      for (int i = 0; i < n; ++i)
        for (const auto& [k, w] : h.product_terms(i, t.b)) rows[static_cast<std::size_t>(k)][var(i, t.a)] += t.v * w;
    for (int k = 0; k < n; ++k) sys.add_equation(std::move(rows[static_cast<std::size_t>(k)]), cm.eps_s(k, x));

    // S(h) = S(h(1)) eps_t(h(2)); with the first family this is equivalent to the
    // sandwich axiom, and it pins down S uniquely.
    rows.assign(static_cast<std::size_t>(n), {});
    for (const auto& t : h.coproduct_terms(x)) {
      const Mat<S>& r = right_by_target[static_cast<std::size_t>(t.b)];
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          if (!is_zero(r(k, i))) rows[static_cast<std::size_t>(k)][var(i, t.a)] += t.v * r(k, i);
    }
    for (int k = 0; k < n; ++k) {
      rows[static_cast<std::size_t>(k)][var(k, x)] -= S(1);
      sys.add_equation(std::move(rows[static_cast<std::size_t>(k)]), S(0));
    }
  }
  if (!sys.consistent()) throw Error(ErrorCode::NoAntipode, "antipode equations are inconsistent");
  if (sys.rank() < n * n)
    throw Error(ErrorCode::NotUnique,
                "antipode solution space has dimension " + std::to_string(n * n - sys.rank()));
  const Vec<S> x = sys.particular();
  Mat<S> s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = x(var(i, j));
  const ValidationReport check = check_antipode(h, s);
  if (!check.ok()) {
    const AxiomCheck* c = check.find("antipode_sandwich");
    throw Error(ErrorCode::Axiom26Failure, "solved antipode fails S(h(1))h(2)S(h(3)) = S(h): " +
                                               (c ? c->residual : std::string("?")));
  }
  return s;
}

template <class S>
WeakHopfAlgebra<S> with_antipode(WeakHopfAlgebra<S> h) {
  if (!h.has_antipode()) h.set_antipode(solve_antipode(h));
  return h;
}

template <class S>
WeakHopfAlgebra<S> dualize(const WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  std::vector<std::string> labels;
  for (const auto& l : h.labels())
    labels.push_back(!l.empty() && l.back() == '*' ? l.substr(0, l.size() - 1) : l + "*");
  WeakHopfAlgebra<S> d(h.field(), std::move(labels));
  for (int k = 0; k < n; ++k)
    for (const auto& t : h.coproduct_terms(k)) d.add_mult(t.a, t.b, k, t.v);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : h.product_terms(i, j)) d.add_comult(k, i, j, v);
  d.set_unit(h.counit());
  d.set_counit(h.unit());
  if (h.has_antipode()) d.set_antipode(h.antipode().transpose());
  d.metadata() = h.metadata();
  if (auto it = h.metadata().find("name"); it != h.metadata().end()) {
    const std::string& name = it->second;
    d.metadata()["name"] = name.size() > 5 && name.compare(0, 5, "dual(") == 0 && name.back() == ')'
                               ? name.substr(5, name.size() - 6)
                               : "dual(" + name + ")";
  }
  return d;
}

// ---------------------------------------------------------------- subalgebras

template <class S>
Subspace<S> center(const WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  Mat<S> stacked(n * n, n);
  for (int i = 0; i < n; ++i) {
    const Vec<S> e = h.basis(i);
    stacked.middleRows(i * n, n) = h.left_mult(e) - h.right_mult(e);
  }
  return kernel(stacked);
}

template <class S>
Subspace<S> product_span(const WeakHopfAlgebra<S>& h, const Subspace<S>& a, const Subspace<S>& b) {
  std::vector<Vec<S>> products;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) products.push_back(h.mul(a.vector(i), b.vector(j)));
  return Subspace<S>::span(h.dim(), products);
}

template <class S>
bool is_closed_under_mult(const WeakHopfAlgebra<S>& h, const Subspace<S>& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!a.contains(h.mul(a.vector(i), a.vector(j)))) return false;
  return true;
}

template <class S>
CounitalSubalgebras<S> counital_subalgebras(const WeakHopfAlgebra<S>& h) {
  const CounitalMaps<S> cm = counital_maps(h);
  CounitalSubalgebras<S> out;
  out.Ht = Subspace<S>::span_columns(cm.eps_t);
  out.Hs = Subspace<S>::span_columns(cm.eps_s);
  out.HtCapHs = out.Ht.intersect(out.Hs);
  out.Hmin = product_span(h, out.Ht, out.Hs);
  out.center = center(h);
  out.ZcapHs = out.center.intersect(out.Hs);
  out.ZcapHt = out.center.intersect(out.Ht);
  for (const Subspace<S>* s : {&out.Ht, &out.Hs, &out.HtCapHs, &out.Hmin, &out.ZcapHs, &out.ZcapHt})
    if (!is_closed_under_mult(h, *s)) out.all_closed = false;
  return out;
}

template <class S>
S regular_trace(const WeakHopfAlgebra<S>& h, const Subspace<S>& sub, const Vec<S>& x) {
  S tr(0);
  for (int i = 0; i < sub.dim(); ++i) {
    const auto c = sub.coordinates(h.mul(x, sub.vector(i)));
    if (!c) throw Error(ErrorCode::InvalidArgument, "regular_trace: subspace is not closed under x");
    tr += (*c)(i);
  }
  return tr;
}

// ---------------------------------------------------------------- Sweedler arrows

template <class S>
Vec<S> lact(const WeakHopfAlgebra<S>& h, const Vec<S>& phi, const Vec<S>& x) {
  return h.comul(x) * phi;
}

template <class S>
Vec<S> ract(const WeakHopfAlgebra<S>& h, const Vec<S>& x, const Vec<S>& phi) {
  return h.comul(x).transpose() * phi;
}

template <class S>
Vec<S> lact_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& x, const Vec<S>& phi) {
  return h.right_mult(x).transpose() * phi;
}

template <class S>
Vec<S> ract_dual(const WeakHopfAlgebra<S>& h, const Vec<S>& phi, const Vec<S>& x) {
  return h.left_mult(x).transpose() * phi;
}

// ---------------------------------------------------------------- minimal part

template <class S>
MinimalData<S> minimal_data(const WeakHopfAlgebra<S>& h) {
  const CounitalSubalgebras<S> sub = counital_subalgebras(h);
  const Subspace<S>& b = sub.Ht;
  const int m = b.dim();
  Mat<S> gram(m, m);
  Vec<S> rhs(m);
  for (int i = 0; i < m; ++i) {
    rhs(i) = h.counit_of(b.vector(i));
    for (int j = 0; j < m; ++j) gram(i, j) = regular_trace(h, b, h.mul(b.vector(i), b.vector(j)));
  }
  auto sol = solve(gram, rhs);
  if (!sol || sol->kernel.dim() != 0)
    throw Error(ErrorCode::Degenerate, "counit restricted to H_t is not given by a regular trace");
  const Vec<S> x = b.columns() * sol->particular;
  Vec<S> g;
  try {
    g = h.invert_element(x);
  } catch (const Error&) {
    throw Error(ErrorCode::Degenerate, "the element representing the counit on H_t is not invertible");
  }
  return {b, sub.HtCapHs, g, x};
}

template <class S>
bool is_regular(const WeakHopfAlgebra<S>& h) {
  const Subspace<S> hmin = counital_subalgebras(h).Hmin;
  const Mat<S> s2 = h.antipode() * h.antipode();
  for (int i = 0; i < hmin.dim(); ++i)
    if (s2 * hmin.vector(i) != hmin.vector(i)) return false;
  return true;
}

template <class S>
ValidationReport check_wha_morphism(const WeakHopfAlgebra<S>& h, const Mat<S>& phi) {
  const int n = h.dim();
  ValidationReport r;
  AxiomCheck mult{"preserves_multiplication"}, unit{"preserves_unit"}, comult{"preserves_comultiplication"},
      counit{"preserves_counit"}, antipode{"commutes_with_antipode"};
  for (int i = 0; i < n && mult.passed; ++i)
    for (int j = 0; j < n && mult.passed; ++j) {
      const Vec<S> l = phi * h.mul(h.basis(i), h.basis(j));
      const Vec<S> rr = h.mul(phi.col(i), phi.col(j));
      if (l != rr) fail(mult, {i, j}, describe_vector_residual<S>(l - rr));
    }
  if (phi * h.unit() != h.unit()) fail(unit, {}, describe_vector_residual<S>(phi * h.unit() - h.unit()));
  for (int i = 0; i < n && comult.passed; ++i) {
    const Mat<S> l = phi * h.comul(h.basis(i)) * phi.transpose();
    const Mat<S> rr = h.comul(phi.col(i));
    if (l != rr) fail(comult, {i}, describe_matrix_residual<S>(l - rr));
  }
  const Vec<S> ce = phi.transpose() * h.counit();
  if (ce != h.counit()) fail(counit, {}, describe_vector_residual<S>(ce - h.counit()));
  if (h.has_antipode()) {
    const Mat<S> d = phi * h.antipode() - h.antipode() * phi;
    if (!is_zero_matrix(d)) fail(antipode, {}, describe_matrix_residual<S>(d));
  }
  r.checks = {mult, unit, comult, counit, antipode};
  return r;
}

#define WHOPF_INSTANTIATE_WHA(S)                                                                           \
  template class WeakHopfAlgebra<S>;                                                                       \
  template std::vector<Term2<S>> tensor_terms<S>(const Mat<S>&);                                           \
  template ValidationReport validate_weak_bialgebra<S>(const WeakHopfAlgebra<S>&);                         \
  template ValidationReport check_antipode<S>(const WeakHopfAlgebra<S>&, const Mat<S>&);                   \
  template ValidationReport validate<S>(const WeakHopfAlgebra<S>&);                                        \
  template Mat<S> solve_antipode<S>(const WeakHopfAlgebra<S>&);                                            \
  template WeakHopfAlgebra<S> with_antipode<S>(WeakHopfAlgebra<S>);                                        \
  template WeakHopfAlgebra<S> dualize<S>(const WeakHopfAlgebra<S>&);                                       \
  template CounitalMaps<S> counital_maps<S>(const WeakHopfAlgebra<S>&);                                    \
  template CounitalSubalgebras<S> counital_subalgebras<S>(const WeakHopfAlgebra<S>&);                      \
  template Subspace<S> center<S>(const WeakHopfAlgebra<S>&);                                               \
  template Subspace<S> product_span<S>(const WeakHopfAlgebra<S>&, const Subspace<S>&, const Subspace<S>&); \
  template bool is_closed_under_mult<S>(const WeakHopfAlgebra<S>&, const Subspace<S>&);                    \
  template S regular_trace<S>(const WeakHopfAlgebra<S>&, const Subspace<S>&, const Vec<S>&);               \
  template Vec<S> lact<S>(const WeakHopfAlgebra<S>&, const Vec<S>&, const Vec<S>&);                        \
  template Vec<S> ract<S>(const WeakHopfAlgebra<S>&, const Vec<S>&, const Vec<S>&);                        \
  template Vec<S> lact_dual<S>(const WeakHopfAlgebra<S>&, const Vec<S>&, const Vec<S>&);                   \
  template Vec<S> ract_dual<S>(const WeakHopfAlgebra<S>&, const Vec<S>&, const Vec<S>&);                   \
  template MinimalData<S> minimal_data<S>(const WeakHopfAlgebra<S>&);                                      \
  template bool is_regular<S>(const WeakHopfAlgebra<S>&);                                                  \
  template ValidationReport check_wha_morphism<S>(const WeakHopfAlgebra<S>&, const Mat<S>&);

WHOPF_INSTANTIATE_WHA(Rational)
WHOPF_INSTANTIATE_WHA(Cyclotomic)

}  // namespace whopf
