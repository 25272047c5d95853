#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "whopf/constructors.hpp"

using namespace whopf;
using oracle::error_code_of;
using Q = Rational;
using H = WeakHopfAlgebra<Q>;

namespace {

Vec<Q> random_element(std::mt19937& rng, int n) { return oracle::random_matrix(rng, n, 1, 3).col(0); }

std::vector<H> small_algebras() {
  return {groupoid_algebra<Q>(pair_groupoid(2)),
          function_algebra<Q>(pair_groupoid(2)),
          group_algebra<Q>(cyclic_group(3)),
          groupoid_algebra<Q>(disjoint_union(cyclic_group(2), pair_groupoid(2))),
          minimal_wha(diagonal_presentation<Q>({1, 1}, {Q(1), Q(1)})),
          with_antipode(sweedler_algebra<Q>())};
}

H corrupt_counit(H h) {
  Vec<Q> c = h.counit();
  c(0) += Q(1);
  h.set_counit(c);
  return h;
}

}  // namespace

TEST_SUITE("wha_core") {
  TEST_CASE("bialgebra validation agrees with the brute-force oracle") {
    for (const H& h : small_algebras()) {
      CAPTURE(h.dim());
      CHECK(oracle::weak_bialgebra_axioms(h));
      CHECK(validate_weak_bialgebra(h).ok());
      const H bad = corrupt_counit(h);
      CHECK(!oracle::weak_bialgebra_axioms(bad));
      CHECK(!validate_weak_bialgebra(bad).ok());
    }
  }

  TEST_CASE("failing checks carry a witness") {
    const ValidationReport r = validate_weak_bialgebra(corrupt_counit(groupoid_algebra<Q>(pair_groupoid(2))));
    bool found = false;
    for (const auto& c : r.checks)
      if (!c.passed) {
        found = true;
        CHECK(!c.witness.empty());
        CHECK(!c.residual.empty());
      }
    CHECK(found);
  }

  TEST_CASE("products and coproducts agree with the structure constants") {
    std::mt19937 rng(17);
    for (const H& h : small_algebras()) {
      for (int t = 0; t < 5; ++t) {
        const Vec<Q> a = random_element(rng, h.dim()), b = random_element(rng, h.dim());
        CHECK(h.mul(a, b) == oracle::mul(h, a, b));
        CHECK(h.comul(a) == oracle::comul(h, a));
        CHECK(Vec<Q>(h.left_mult(a) * b) == h.mul(a, b));
        CHECK(Vec<Q>(h.right_mult(b) * a) == h.mul(a, b));
        const Mat<Q> x = h.comul(a), y = h.comul(b);
        CHECK(h.mul_tensor(x, y) == oracle::mul2(h, x, y));
      }
      CHECK(h.delta_one() == oracle::comul(h, h.unit()));
    }
  }

  TEST_CASE("antipode is solved uniquely and satisfies its axioms") {
    for (const H& h : small_algebras()) {
      CHECK(solve_antipode(h) == h.antipode());
      CHECK(check_antipode(h, h.antipode()).ok());
      H bare = h;
      bare.clear_antipode();
      CHECK(with_antipode(bare).antipode() == h.antipode());
      CHECK(validate(h).ok());
    }
    // groupoid algebras: S(g) = g^-1
    const GroupoidPresentation g = pair_groupoid(3);
    const H h = groupoid_algebra<Q>(g);
    const auto inv = g.inverses();
    for (int i = 0; i < h.dim(); ++i) CHECK(h.apply_S(h.basis(i)) == h.basis(inv[static_cast<std::size_t>(i)]));
    H none = h;
    none.clear_antipode();
    CHECK(error_code_of([&] { (void)none.antipode(); }) == ErrorCode::NoAntipode);
  }

  TEST_CASE("double dual is the identity") {
    for (const H& h : small_algebras()) {
      const H d = dualize(h);
      CHECK(validate(d).ok());
      CHECK(dualize(d) == h);
      CHECK(d.unit() == h.counit());
      CHECK(d.counit() == h.unit());
      CHECK(d.antipode() == Mat<Q>(h.antipode().transpose()));
    }
    CHECK(dualize(groupoid_algebra<Q>(pair_groupoid(2))) == function_algebra<Q>(pair_groupoid(2)));
  }

  TEST_CASE("counital maps and base algebras") {
    const H pair3 = groupoid_algebra<Q>(pair_groupoid(3));
    const auto sub = counital_subalgebras(pair3);
    CHECK(sub.Ht.dim() == 3);
    CHECK(sub.Hs.dim() == 3);
    CHECK(sub.Ht == sub.Hs);
    CHECK(sub.all_closed);
    CHECK(sub.center.dim() == 1);
    const auto maps = counital_maps(pair3);
    // eps_t and eps_s are idempotent projections onto H_t and H_s
    CHECK(Mat<Q>(maps.eps_t * maps.eps_t) == maps.eps_t);
    CHECK(Mat<Q>(maps.eps_s * maps.eps_s) == maps.eps_s);
    CHECK(Subspace<Q>::span_columns(maps.eps_t) == sub.Ht);
    CHECK(Subspace<Q>::span_columns(maps.eps_s) == sub.Hs);
    // a Hopf algebra has one-dimensional bases
    const auto hopf = counital_subalgebras(group_algebra<Q>(cyclic_group(4)));
    CHECK(hopf.Ht.dim() == 1);
    CHECK(hopf.Hmin.dim() == 1);
  }

  TEST_CASE("Sweedler arrows") {
    std::mt19937 rng(23);
    for (const H& h : small_algebras()) {
      const Vec<Q> x = random_element(rng, h.dim()), phi = random_element(rng, h.dim());
      const Vec<Q> y = random_element(rng, h.dim());
      CHECK(lact(h, h.counit(), x) == x);
      CHECK(ract(h, x, h.counit()) == x);
      // <h -> phi, y> = <phi, y h>
      CHECK(lact_dual(h, x, phi).dot(y) == phi.dot(h.mul(y, x)));
      CHECK(ract_dual(h, phi, x).dot(y) == phi.dot(h.mul(x, y)));
      CHECK(h.dual_mul(h.counit(), phi) == phi);
      CHECK(h.dual_mul(phi, h.counit()) == phi);
    }
  }

  TEST_CASE("regularity") {
    CHECK(is_regular(groupoid_algebra<Q>(pair_groupoid(2))));
    CHECK(is_regular(minimal_wha(diagonal_presentation<Q>({2}, {Q(1), Q(1)}))));
    CHECK(!is_regular(minimal_wha(diagonal_presentation<Q>({2}, {Q(3), Q(-1)}))));
  }

  TEST_CASE("element inversion") {
    const H h = group_algebra<Q>(cyclic_group(3));
    const Vec<Q> x = Q(2) * h.basis(0) + h.basis(1);
    REQUIRE(h.is_invertible(x));
    CHECK(h.mul(x, h.invert_element(x)) == h.unit());
    const Vec<Q> y = h.basis(0) + h.basis(1) + h.basis(2);
    CHECK(!h.is_invertible(y));
    CHECK(error_code_of([&] { (void)h.invert_element(y); }) == ErrorCode::NotInvertible);
  }
}

TEST_SUITE("constructors") {
  TEST_CASE("dimensions of the standard examples") {
    CHECK(groupoid_algebra<Q>(pair_groupoid(2)).dim() == 4);
    CHECK(groupoid_algebra<Q>(pair_groupoid(3)).dim() == 9);
    CHECK(group_algebra<Q>(symmetric_group3()).dim() == 6);
    CHECK(sweedler_algebra<Q>().dim() == 4);
    CHECK(minimal_wha(diagonal_presentation<Q>({1, 1}, {Q(1), Q(1)})).dim() == 4);
    CHECK(minimal_wha(diagonal_presentation<Q>({2}, {Q(1), Q(1)})).dim() == 16);
  }

  TEST_CASE("groupoid presentations are checked") {
    CHECK(error_code_of([] { (void)group_algebra<Q>(pair_groupoid(2)); }) == ErrorCode::InvalidPresentation);
    GroupoidPresentation g = cyclic_group(3);
    g.compose[1][1] = 1;
    CHECK(error_code_of([&] { g.check(); }) == ErrorCode::InvalidPresentation);
    const GroupoidPresentation s3 = symmetric_group3();
    CHECK_NOTHROW(s3.check());
    CHECK(s3.identities() == std::vector<int>{0});
  }

  TEST_CASE("group algebra elements are group-like") {
    const H h = group_algebra<Q>(symmetric_group3());
    for (int i = 0; i < h.dim(); ++i) {
      const Mat<Q> d = h.comul(h.basis(i));
      CHECK(d == Mat<Q>(h.basis(i) * h.basis(i).transpose()));
      CHECK(h.counit_of(h.basis(i)) == Q(1));
    }
  }

  TEST_CASE("matrix algebra equals the pair groupoid algebra") {
    CHECK(matrix_wha<Q>(2) == groupoid_algebra<Q>(pair_groupoid(2)));
    CHECK(matrix_wha<Q>(3) == groupoid_algebra<Q>(pair_groupoid(3)));
  }

  TEST_CASE("tensor products") {
    const H a = groupoid_algebra<Q>(pair_groupoid(2));
    const H b = group_algebra<Q>(cyclic_group(2));
    const H one = group_algebra<Q>(cyclic_group(1));
    CHECK(tensor_product(a, one) == a);
    const H ab = tensor_product(a, b);
    CHECK(ab.dim() == 8);
    CHECK(validate(ab).ok());
    CHECK(dualize(ab) == tensor_product(dualize(a), dualize(b)));
    CHECK(ab.antipode() == kronecker(a.antipode(), b.antipode()));
    const auto c3 = group_algebra<Cyclotomic>(cyclic_group(2), FieldSpec::cyclotomic(3));
    const auto c5 = group_algebra<Cyclotomic>(cyclic_group(2), FieldSpec::cyclotomic(5));
    CHECK(error_code_of([&] { (void)tensor_product(c3, c5); }) == ErrorCode::FieldMismatch);
    const auto mixed = tensor_product(c3, group_algebra<Cyclotomic>(cyclic_group(2)));
    CHECK(mixed.field() == FieldSpec::cyclotomic(3));
  }

  TEST_CASE("separability element") {
    const auto p = diagonal_presentation<Q>({2, 1}, {Q(1), Q(1), Q(1)});
    const auto e = separability_element(p);
    // sum_ij (1/n) E_ij (x) E_ji per block
    CHECK(e.size() == 5);
    for (const auto& t : e) {
      const int n = t.a < 4 ? 2 : 1;
      CHECK(t.v == Q(1, n));
    }
    const auto b = block_algebra(p);
    CHECK(is_two_sided_separability_element(b, e));
    auto broken = e;
    broken[0].v = Q(1);
    CHECK(!is_two_sided_separability_element(b, broken));
  }

  TEST_CASE("minimal weak Hopf algebras") {
    const H h = minimal_wha(diagonal_presentation<Q>({2}, {Q(3), Q(-1)}));
    CHECK(validate(h).ok());
    const auto sub = counital_subalgebras(h);
    CHECK(sub.Ht.dim() == 4);
    CHECK(sub.Hmin.dim() == h.dim());
    const H plain = minimal_wha(diagonal_presentation<Q>({2}, {Q(1), Q(1)}));
    const Mat<Q> s = plain.antipode();
    CHECK(Mat<Q>(s * s) == Mat<Q>::Identity(plain.dim(), plain.dim()));
    // with g = diag(3, -1) the square of S is not the identity
    const Mat<Q> s2 = h.antipode() * h.antipode();
    CHECK(s2 != Mat<Q>::Identity(h.dim(), h.dim()));
    CHECK(error_code_of([] { (void)minimal_wha(diagonal_presentation<Q>({2}, {Q(1), Q(2)})); }) ==
          ErrorCode::TraceConditionViolated);
    CHECK(error_code_of([] { (void)minimal_wha(diagonal_presentation<Q>({2}, {Q(2), Q(0)})); }) ==
          ErrorCode::InvalidPresentation);
  }

  TEST_CASE("minimal data recovers the defining element") {
    // eps(b) = Tr_reg(g^-1 b) on H_t with g invertible; g = 1 gives eps = Tr_reg on H_t
    const H h = minimal_wha(diagonal_presentation<Q>({2}, {Q(3), Q(-1)}));
    const MinimalData<Q> m = minimal_data(h);
    CHECK(m.B.dim() == 4);
    CHECK(m.A.dim() == 1);
    CHECK(h.mul(m.g, m.g_inverse) == h.unit());
    CHECK(m.B.contains(m.g));
    for (int i = 0; i < m.B.dim(); ++i) {
      const Vec<Q> b = m.B.vector(i);
      CHECK(h.counit_of(b) == regular_trace(h, m.B, h.mul(m.g_inverse, b)));
    }
    const MinimalData<Q> m1 = minimal_data(minimal_wha(diagonal_presentation<Q>({2}, {Q(1), Q(1)})));
    CHECK(m1.g == m1.g_inverse);
  }
}
