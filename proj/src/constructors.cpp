#include "whopf/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace whopf {

// ---------------------------------------------------------------- groupoids

std::vector<int> GroupoidPresentation::identities() const {
  std::vector<int> ids(static_cast<std::size_t>(objects), -1);
  for (int f = 0; f < size(); ++f) {
    const auto& m = morphisms[static_cast<std::size_t>(f)];
    if (m.source != m.target) continue;
    bool identity = true;
    for (int g = 0; g < size() && identity; ++g) {
      const int fg = compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
      const int gf = compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      if (fg >= 0 && fg != g) identity = false;
      if (gf >= 0 && gf != g) identity = false;
    }
    if (identity) ids[static_cast<std::size_t>(m.source)] = f;
  }
  return ids;
}

std::vector<int> GroupoidPresentation::inverses() const {
  const auto ids = identities();
  std::vector<int> inv(static_cast<std::size_t>(size()), -1);
  for (int f = 0; f < size(); ++f)
    for (int g = 0; g < size(); ++g) {
      const auto& mf = morphisms[static_cast<std::size_t>(f)];
      const int fg = compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
      const int gf = compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      if (fg >= 0 && gf >= 0 && fg == ids[static_cast<std::size_t>(mf.target)] &&
          gf == ids[static_cast<std::size_t>(mf.source)]) {
        inv[static_cast<std::size_t>(f)] = g;
        break;
      }
    }
  return inv;
}

void GroupoidPresentation::check() const {
  auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvalidPresentation, msg); };
  const int n = size();
  if (objects < 1) bad("a groupoid needs at least one object");
  if (compose.size() != static_cast<std::size_t>(n)) bad("composition table has wrong size");
  for (const auto& m : morphisms)
    if (m.source < 0 || m.source >= objects || m.target < 0 || m.target >= objects)
      bad("morphism '" + m.label + "' has an out of range endpoint");
  for (int f = 0; f < n; ++f) {
    if (compose[static_cast<std::size_t>(f)].size() != static_cast<std::size_t>(n)) bad("composition table has wrong size");
    for (int g = 0; g < n; ++g) {
      const auto& mf = morphisms[static_cast<std::size_t>(f)];
      const auto& mg = morphisms[static_cast<std::size_t>(g)];
      const int fg = compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
      const bool composable = mf.source == mg.target;
      if (composable != (fg >= 0))
        bad("composition of '" + mf.label + "' after '" + mg.label + "' must be defined exactly when endpoints match");
      if (fg >= n) bad("composition result out of range");
      if (fg >= 0) {
        const auto& mfg = morphisms[static_cast<std::size_t>(fg)];
        if (mfg.source != mg.source || mfg.target != mf.target)
          bad("composite of '" + mf.label + "' after '" + mg.label + "' has wrong endpoints");
      }
    }
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const int fg = compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
        const int gh = compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
        if (fg < 0 || gh < 0) continue;
        if (compose[static_cast<std::size_t>(fg)][static_cast<std::size_t>(h)] !=
            compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(gh)])
          bad("composition is not associative");
      }
  const auto ids = identities();
  for (int x = 0; x < objects; ++x)
    if (ids[static_cast<std::size_t>(x)] < 0) bad("object " + std::to_string(x) + " has no identity morphism");
  const auto inv = inverses();
  for (int f = 0; f < n; ++f)
    if (inv[static_cast<std::size_t>(f)] < 0) bad("morphism '" + morphisms[static_cast<std::size_t>(f)].label + "' is not invertible");
}

GroupoidPresentation pair_groupoid(int n, const std::string& prefix) {
  if (n < 1) throw Error(ErrorCode::InvalidPresentation, "pair groupoid needs at least one object");
  GroupoidPresentation g;
  g.objects = n;
  auto idx = [n](int x, int y) { return x * n + y; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::string sep = n >= 10 ? "," : "";
      g.morphisms.push_back({prefix + std::to_string(x + 1) + sep + std::to_string(y + 1), y, x});
    }
  g.compose.assign(static_cast<std::size_t>(n * n), std::vector<int>(static_cast<std::size_t>(n * n), -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) g.compose[static_cast<std::size_t>(idx(x, y))][static_cast<std::size_t>(idx(y, z))] = idx(x, z);
  return g;
}

GroupoidPresentation group_groupoid(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
  GroupoidPresentation g;
  g.objects = 1;
  for (auto& l : labels) g.morphisms.push_back({std::move(l), 0, 0});
  g.compose = table;
  g.check();
  return g;
}

GroupoidPresentation cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidPresentation, "cyclic group order must be positive");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return group_groupoid(table, std::move(labels));
}

GroupoidPresentation symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    const auto& pa = perms[static_cast<std::size_t>(a)];
    labels.push_back("s" + std::to_string(pa[0] + 1) + std::to_string(pa[1] + 1) + std::to_string(pa[2] + 1));
    for (int b = 0; b < n; ++b) {
      const auto& pb = perms[static_cast<std::size_t>(b)];
      std::array<int, 3> c{pa[static_cast<std::size_t>(pb[0])], pa[static_cast<std::size_t>(pb[1])],
                           pa[static_cast<std::size_t>(pb[2])]};
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return group_groupoid(table, std::move(labels));
}

GroupoidPresentation disjoint_union(const GroupoidPresentation& a, const GroupoidPresentation& b) {
  GroupoidPresentation g;
  g.objects = a.objects + b.objects;
  const int na = a.size(), nb = b.size();
  for (const auto& m : a.morphisms) g.morphisms.push_back({m.label + "_1", m.source, m.target});
  for (const auto& m : b.morphisms) g.morphisms.push_back({m.label + "_2", m.source + a.objects, m.target + a.objects});
  g.compose.assign(static_cast<std::size_t>(na + nb), std::vector<int>(static_cast<std::size_t>(na + nb), -1));
  for (int f = 0; f < na; ++f)
    for (int h = 0; h < na; ++h) g.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(h)] = a.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(h)];
  for (int f = 0; f < nb; ++f)
    for (int h = 0; h < nb; ++h) {
      const int c = b.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(h)];
      g.compose[static_cast<std::size_t>(na + f)][static_cast<std::size_t>(na + h)] = c < 0 ? -1 : na + c;
    }
  return g;
}

template <class S>
WeakHopfAlgebra<S> groupoid_algebra(const GroupoidPresentation& g, const FieldSpec& field) {
  g.check();
  const int n = g.size();
  std::vector<std::string> labels;
  for (const auto& m : g.morphisms) labels.push_back(m.label);
  WeakHopfAlgebra<S> h(field, std::move(labels));
  for (int f = 0; f < n; ++f) {
    for (int k = 0; k < n; ++k) {
      const int c = g.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(k)];
      if (c >= 0) h.add_mult(f, k, c, S(1));
    }
    h.add_comult(f, f, f, S(1));
  }
  Vec<S> unit = Vec<S>::Zero(n);
  for (int id : g.identities()) unit(id) = S(1);
  h.set_unit(unit);
  h.set_counit(Vec<S>::Constant(n, S(1)));
  Mat<S> s = Mat<S>::Zero(n, n);
  const auto inv = g.inverses();
  for (int f = 0; f < n; ++f) s(inv[static_cast<std::size_t>(f)], f) = S(1);
  h.set_antipode(s);
  h.metadata()["name"] = "groupoid algebra";
  return h;
}

template <class S>
WeakHopfAlgebra<S> function_algebra(const GroupoidPresentation& g, const FieldSpec& field) {
  g.check();
  const int n = g.size();
  std::vector<std::string> labels;
  for (const auto& m : g.morphisms) labels.push_back("p_" + m.label);
  WeakHopfAlgebra<S> h(field, std::move(labels));
  for (int f = 0; f < n; ++f) h.add_mult(f, f, f, S(1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int c = g.compose[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (c >= 0) h.add_comult(c, u, v, S(1));
    }
  h.set_unit(Vec<S>::Constant(n, S(1)));
  Vec<S> counit = Vec<S>::Zero(n);
  for (int id : g.identities()) counit(id) = S(1);
  h.set_counit(counit);
  Mat<S> s = Mat<S>::Zero(n, n);
  const auto inv = g.inverses();
  for (int f = 0; f < n; ++f) s(inv[static_cast<std::size_t>(f)], f) = S(1);
  h.set_antipode(s);
  h.metadata()["name"] = "function algebra";
  return h;
}

template <class S>
WeakHopfAlgebra<S> matrix_wha(int n, const FieldSpec& field) {
  WeakHopfAlgebra<S> h = groupoid_algebra<S>(pair_groupoid(n, "E"), field);
  h.metadata()["name"] = "M" + std::to_string(n);
  return h;
}

template <class S>
WeakHopfAlgebra<S> tensor_product(const WeakHopfAlgebra<S>& a, const WeakHopfAlgebra<S>& b) {
  const FieldSpec field = join(a.field(), b.field());
  const int na = a.dim(), nb = b.dim();
  std::vector<std::string> labels;
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(la + "." + lb);
  WeakHopfAlgebra<S> h(field, std::move(labels));
  auto idx = [nb](int i, int j) { return i * nb + j; };
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < na; ++j1)
      for (const auto& [k1, v1] : a.product_terms(i1, j1))
        for (int i2 = 0; i2 < nb; ++i2)
          for (int j2 = 0; j2 < nb; ++j2)
            for (const auto& [k2, v2] : b.product_terms(i2, j2)) h.add_mult(idx(i1, i2), idx(j1, j2), idx(k1, k2), v1 * v2);
  for (int i1 = 0; i1 < na; ++i1)
    for (const auto& t1 : a.coproduct_terms(i1))
      for (int i2 = 0; i2 < nb; ++i2)
        for (const auto& t2 : b.coproduct_terms(i2)) h.add_comult(idx(i1, i2), idx(t1.a, t2.a), idx(t1.b, t2.b), t1.v * t2.v);
  const Mat<S> ua = a.unit(), ub = b.unit(), ca = a.counit(), cb = b.counit();
  h.set_unit(kronecker<S>(ua, ub));
  h.set_counit(kronecker<S>(ca, cb));
  if (a.has_antipode() && b.has_antipode()) h.set_antipode(kronecker(a.antipode(), b.antipode()));
  const auto na_it = a.metadata().find("name");
  const auto nb_it = b.metadata().find("name");
  h.metadata()["name"] = (na_it != a.metadata().end() ? na_it->second : std::string("H1")) + " (x) " +
                         (nb_it != b.metadata().end() ? nb_it->second : std::string("H2"));
  return h;
}

template <class S>
WeakHopfAlgebra<S> sweedler_algebra() {
  // Basis g^a x^b at index a + 2b: 1, g, x, gx.
  WeakHopfAlgebra<S> h(FieldSpec::rational(), {"1", "g", "x", "gx"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int a = i % 2, b = i / 2, c = j % 2, d = j / 2;
      if (b + d >= 2) continue;
      const int sign = (b * c) % 2 == 0 ? 1 : -1;
      h.add_mult(i, j, (a + c) % 2 + 2 * (b + d), S(sign));
    }
  h.add_comult(0, 0, 0, S(1));
  h.add_comult(1, 1, 1, S(1));
  h.add_comult(2, 2, 0, S(1));
  h.add_comult(2, 1, 2, S(1));
  // Delta(gx) = Delta(g)Delta(x) = gx (x) g + 1 (x) gx.
  h.add_comult(3, 3, 1, S(1));
  h.add_comult(3, 0, 3, S(1));
  h.set_unit(unit_vector<S>(4, 0));
  Vec<S> counit = Vec<S>::Zero(4);
  counit(0) = S(1);
  counit(1) = S(1);
  h.set_counit(counit);
  h.metadata()["name"] = "Sweedler algebra";
  return h;
}

// ---------------------------------------------------------------- semisimple data

template <class S>
int SemisimplePresentation<S>::dim() const {
  int d = 0;
  for (int n : blocks) d += n * n;
  return d;
}

template <class S>
int SemisimplePresentation<S>::offset(int block) const {
  int d = 0;
  for (int b = 0; b < block; ++b) d += blocks[static_cast<std::size_t>(b)] * blocks[static_cast<std::size_t>(b)];
  return d;
}

template <class S>
std::vector<std::string> SemisimplePresentation<S>::labels() const {
  std::vector<std::string> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i = 0; i < blocks[b]; ++i)
      for (int j = 0; j < blocks[b]; ++j) {
        std::string l = "E";
        if (blocks.size() > 1) l += std::to_string(b + 1) + ":";
        out.push_back(l + std::to_string(i + 1) + std::to_string(j + 1));
      }
  return out;
}

template <class S>
SemisimplePresentation<S> diagonal_presentation(const std::vector<int>& blocks, const std::vector<S>& diagonal) {
  SemisimplePresentation<S> p;
  p.blocks = blocks;
  std::size_t pos = 0;
  for (int n : blocks) {
    Mat<S> g = Mat<S>::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      if (pos >= diagonal.size()) throw Error(ErrorCode::InvalidPresentation, "too few diagonal entries for g");
      g(i, i) = diagonal[pos++];
    }
    p.g.push_back(g);
  }
  if (pos != diagonal.size()) throw Error(ErrorCode::InvalidPresentation, "too many diagonal entries for g");
  return p;
}

template <class S>
Vec<S> BlockAlgebra<S>::mul(const Vec<S>& a, const Vec<S>& b) const {
  Vec<S> r = Vec<S>::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(a(i))) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(b(j))) continue;
      for (const auto& [k, v] : products[static_cast<std::size_t>(i * dim + j)]) r(k) += a(i) * b(j) * v;
    }
  }
  return r;
}

template <class S>
S BlockAlgebra<S>::regular_trace(const Vec<S>& a) const {
  S t(0);
  for (int j = 0; j < dim; ++j) t += mul(a, unit_vector<S>(dim, j))(j);
  return t;
}

template <class S>
BlockAlgebra<S> block_algebra(const SemisimplePresentation<S>& p) {
  BlockAlgebra<S> b;
  b.dim = p.dim();
  b.products.assign(static_cast<std::size_t>(b.dim * b.dim), {});
  b.unit = Vec<S>::Zero(b.dim);
  for (std::size_t blk = 0; blk < p.blocks.size(); ++blk) {
    const int n = p.blocks[blk];
    const int bi = static_cast<int>(blk);
    for (int i = 0; i < n; ++i) {
      b.unit(p.index(bi, i, i)) = S(1);
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          b.products[static_cast<std::size_t>(p.index(bi, i, j) * b.dim + p.index(bi, j, l))].push_back(
              {p.index(bi, i, l), S(1)});
    }
  }
  return b;
}

template <class S>
std::vector<Term2<S>> separability_element(const SemisimplePresentation<S>& p) {
  std::vector<Term2<S>> e;
  for (std::size_t blk = 0; blk < p.blocks.size(); ++blk) {
    const int n = p.blocks[blk];
    const S w = S(1) / S(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        e.push_back({p.index(static_cast<int>(blk), i, j), p.index(static_cast<int>(blk), j, i), w});
  }
  return e;
}

template <class S>
bool is_two_sided_separability_element(const BlockAlgebra<S>& b, const std::vector<Term2<S>>& e) {
  const int d = b.dim;
  auto as_matrix = [d](const std::vector<std::pair<Vec<S>, Vec<S>>>& terms) {
    Mat<S> m = Mat<S>::Zero(d, d);
    for (const auto& [x, y] : terms) m += x * y.transpose();
    return m;
  };
  Vec<S> me = Vec<S>::Zero(d);
  for (const auto& t : e) me += t.v * b.mul(unit_vector<S>(d, t.a), unit_vector<S>(d, t.b));
  if (me != b.unit) return false;
  for (int a = 0; a < d; ++a) {
    const Vec<S> av = unit_vector<S>(d, a);
    std::vector<std::pair<Vec<S>, Vec<S>>> l1, r1, l2, r2;
    for (const auto& t : e) {
      const Vec<S> x = t.v * unit_vector<S>(d, t.a), y = unit_vector<S>(d, t.b);
      l1.push_back({b.mul(av, x), y});
      r1.push_back({x, b.mul(y, av)});
      l2.push_back({b.mul(x, av), y});
      r2.push_back({x, b.mul(av, y)});
    }
    if (as_matrix(l1) != as_matrix(r1) || as_matrix(l2) != as_matrix(r2)) return false;
  }
  return true;
}

template <class S>
WeakHopfAlgebra<S> minimal_wha(const SemisimplePresentation<S>& p) {
  if (p.blocks.empty()) throw Error(ErrorCode::InvalidPresentation, "B needs at least one block");
  for (int n : p.blocks)
    if (n < 1) throw Error(ErrorCode::InvalidPresentation, "block sizes must be positive");
  if (p.g.size() != p.blocks.size()) throw Error(ErrorCode::InvalidPresentation, "g needs one matrix per block");
  for (const auto& a : p.central_generators)
    if (a.size() != p.blocks.size())
      throw Error(ErrorCode::InvalidPresentation, "central generators need one scalar per block");

  const BlockAlgebra<S> B = block_algebra(p);
  const int d = B.dim;
  Vec<S> g = Vec<S>::Zero(d), g_inv = Vec<S>::Zero(d);
  for (std::size_t blk = 0; blk < p.blocks.size(); ++blk) {
    const int n = p.blocks[blk];
    const Mat<S>& gb = p.g[blk];
    if (gb.rows() != n || gb.cols() != n) throw Error(ErrorCode::InvalidPresentation, "g block has wrong size");
    if (trace(gb) != S(n))
      throw Error(ErrorCode::TraceConditionViolated, "trace of g on block " + std::to_string(blk + 1) + " is " +
                                                         FieldOps<S>::format(trace(gb)) + ", expected " +
                                                         std::to_string(n));
    Mat<S> gi;
    try {
      gi = invert(gb);
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidPresentation, "g is not invertible");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        g(p.index(static_cast<int>(blk), i, j)) = gb(i, j);
        g_inv(p.index(static_cast<int>(blk), i, j)) = gi(i, j);
      }
  }
  const auto sep = separability_element(p);
  if (!is_two_sided_separability_element(B, sep))
    throw Error(ErrorCode::NotSeparable, "separability element check failed");

  // B (x) B^op with index x*d + y for x (x) bar(y); relations a x (x) bar(y) - x (x) bar(y a).
  const int d2 = d * d;
  auto pair_vector = [d, d2](const Vec<S>& x, const Vec<S>& y) {
    Vec<S> v = Vec<S>::Zero(d2);
    for (int i = 0; i < d; ++i) {
      if (is_zero(x(i))) continue;
      for (int j = 0; j < d; ++j)
        if (!is_zero(y(j))) v(i * d + j) += x(i) * y(j);
    }
    return v;
  };
  std::vector<Vec<S>> relations;
  for (const auto& gen : p.central_generators) {
    Vec<S> a = Vec<S>::Zero(d);
    for (std::size_t blk = 0; blk < p.blocks.size(); ++blk)
      for (int i = 0; i < p.blocks[blk]; ++i) a(p.index(static_cast<int>(blk), i, i)) = gen[blk];
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        const Vec<S> ex = unit_vector<S>(d, x), ey = unit_vector<S>(d, y);
        relations.push_back(pair_vector(B.mul(a, ex), ey) - pair_vector(ex, B.mul(ey, a)));
      }
  }
  const Subspace<S> rel = Subspace<S>::span(d2, relations);
  // Quotient basis: first standard basis vectors independent modulo the relations.
  std::vector<int> chosen;
  Subspace<S> acc = rel;
  for (int c = 0; c < d2 && acc.dim() < d2; ++c) {
    const Vec<S> e = unit_vector<S>(d2, c);
    if (acc.contains(e)) continue;
    chosen.push_back(c);
    acc = acc.sum(Subspace<S>::span(d2, {e}));
  }
  const int n = static_cast<int>(chosen.size());
  Mat<S> frame(d2, d2);
  for (int i = 0; i < rel.dim(); ++i) frame.col(i) = rel.vector(i);
  for (int i = 0; i < n; ++i) frame.col(rel.dim() + i) = unit_vector<S>(d2, chosen[static_cast<std::size_t>(i)]);
  const Mat<S> frame_inv = invert(frame);
  auto project = [&](const Vec<S>& v) -> Vec<S> { return (frame_inv * v).tail(n); };

  const auto blabels = p.labels();
  std::vector<std::string> labels;
  for (int c : chosen)
    labels.push_back(blabels[static_cast<std::size_t>(c / d)] + "|" + blabels[static_cast<std::size_t>(c % d)]);
  WeakHopfAlgebra<S> h(FieldSpec::rational(), std::move(labels));

  std::vector<Vec<S>> bx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) bx[static_cast<std::size_t>(i)] = unit_vector<S>(d, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ci = chosen[static_cast<std::size_t>(i)], cj = chosen[static_cast<std::size_t>(j)];
      const Vec<S>& x = bx[static_cast<std::size_t>(ci / d)];
      const Vec<S>& y = bx[static_cast<std::size_t>(ci % d)];
      const Vec<S>& x2 = bx[static_cast<std::size_t>(cj / d)];
      const Vec<S>& y2 = bx[static_cast<std::size_t>(cj % d)];
      const Vec<S> prod = project(pair_vector(B.mul(x, x2), B.mul(y2, y)));
      for (int k = 0; k < n; ++k)
        if (!is_zero(prod(k))) h.add_mult(i, j, k, prod(k));
    }
  h.set_unit(project(pair_vector(B.unit, B.unit)));

  Vec<S> counit(n);
  Mat<S> antipode(n, n);
  for (int i = 0; i < n; ++i) {
    const int ci = chosen[static_cast<std::size_t>(i)];
    const Vec<S>& x = bx[static_cast<std::size_t>(ci / d)];
    const Vec<S>& y = bx[static_cast<std::size_t>(ci % d)];
    // Delta(x bar(y)) = sum (x (x) bar(g e1)) (x) (e2 (x) bar(y))
    Mat<S> delta = Mat<S>::Zero(n, n);
    for (const auto& t : sep) {
      const Vec<S> left = project(pair_vector(x, B.mul(g, bx[static_cast<std::size_t>(t.a)])));
      const Vec<S> right = project(pair_vector(bx[static_cast<std::size_t>(t.b)], y));
      delta += t.v * left * right.transpose();
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!is_zero(delta(a, b))) h.add_comult(i, a, b, delta(a, b));
    counit(i) = B.regular_trace(B.mul(g_inv, B.mul(y, x)));
    antipode.col(i) = project(pair_vector(B.mul(g_inv, B.mul(y, g)), x));
  }
  h.set_counit(counit);
  h.set_antipode(antipode);
  h.metadata()["name"] = "H_min";
  return h;
}

#define WHOPF_INSTANTIATE_CONSTRUCTORS(S)                                                                        \
  template WeakHopfAlgebra<S> groupoid_algebra<S>(const GroupoidPresentation&, const FieldSpec&);               \
  template WeakHopfAlgebra<S> function_algebra<S>(const GroupoidPresentation&, const FieldSpec&);               \
  template WeakHopfAlgebra<S> matrix_wha<S>(int, const FieldSpec&);                                             \
  template WeakHopfAlgebra<S> tensor_product<S>(const WeakHopfAlgebra<S>&, const WeakHopfAlgebra<S>&);          \
  template WeakHopfAlgebra<S> sweedler_algebra<S>();                                                            \
  template struct SemisimplePresentation<S>;                                                                    \
  template SemisimplePresentation<S> diagonal_presentation<S>(const std::vector<int>&, const std::vector<S>&); \
  template struct BlockAlgebra<S>;                                                                              \
  template BlockAlgebra<S> block_algebra<S>(const SemisimplePresentation<S>&);                                  \
  template std::vector<Term2<S>> separability_element<S>(const SemisimplePresentation<S>&);                     \
  template bool is_two_sided_separability_element<S>(const BlockAlgebra<S>&, const std::vector<Term2<S>>&);     \
  template WeakHopfAlgebra<S> minimal_wha<S>(const SemisimplePresentation<S>&);

WHOPF_INSTANTIATE_CONSTRUCTORS(Rational)
WHOPF_INSTANTIATE_CONSTRUCTORS(Cyclotomic)

}  // namespace whopf
