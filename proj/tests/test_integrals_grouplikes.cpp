#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "whopf/constructors.hpp"
#include "whopf/grouplikes.hpp"
#include "whopf/integrals.hpp"

using namespace whopf;
using oracle::error_code_of;
using Q = Rational;
using H = WeakHopfAlgebra<Q>;

namespace {

std::vector<H> frobenius_examples() {
  return {groupoid_algebra<Q>(pair_groupoid(2)),
          group_algebra<Q>(symmetric_group3()),
          dualize(groupoid_algebra<Q>(pair_groupoid(3))),
          groupoid_algebra<Q>(disjoint_union(cyclic_group(2), cyclic_group(2))),
          minimal_wha(diagonal_presentation<Q>({2}, {Q(1), Q(1)})),
          with_antipode(sweedler_algebra<Q>())};
}

// x^2 = 0 with Delta(1) = 1 (x) 1, Delta(x) = 0: a weak bialgebra-shaped object without
// enough integrals.
H truncated_polynomial() {
  H h(FieldSpec::rational(), {"1", "x"});
  h.add_mult(0, 0, 0, Q(1));
  h.add_mult(0, 1, 1, Q(1));
  h.add_mult(1, 0, 1, Q(1));
  h.add_comult(0, 0, 0, Q(1));
  h.set_unit(unit_vector<Q>(2, 0));
  Vec<Q> c(2);
  c << Q(1), Q(1);
  h.set_counit(c);
  return h;
}

}  // namespace

TEST_SUITE("integrals") {
  TEST_CASE("integral spaces have the dimension of the target base") {
    for (const H& h : frobenius_examples()) {
      const int ht = counital_subalgebras(h).Ht.dim();
      CHECK(integral_space(h, Side::Left).dim() == ht);
      CHECK(integral_space(h, Side::Right).dim() == ht);
    }
  }

  TEST_CASE("left integrals satisfy their defining identity") {
    for (const H& h : frobenius_examples()) {
      const auto maps = counital_maps(h);
      const Subspace<Q> left = integral_space(h, Side::Left);
      const Subspace<Q> right = integral_space(h, Side::Right);
      for (int k = 0; k < left.dim(); ++k)
        for (int i = 0; i < h.dim(); ++i) {
          const Vec<Q> l = left.vector(k);
          CHECK(oracle::mul(h, h.basis(i), l) == oracle::mul(h, Vec<Q>(maps.eps_t.col(i)), l));
        }
      for (int k = 0; k < right.dim(); ++k)
        for (int i = 0; i < h.dim(); ++i) {
          const Vec<Q> r = right.vector(k);
          CHECK(oracle::mul(h, r, h.basis(i)) == oracle::mul(h, r, Vec<Q>(maps.eps_s.col(i))));
        }
    }
  }

  TEST_CASE("group algebra integral is the sum of the group") {
    const H h = group_algebra<Q>(symmetric_group3());
    const Subspace<Q> left = integral_space(h, Side::Left);
    REQUIRE(left.dim() == 1);
    CHECK(left.contains(Vec<Q>::Ones(6)));
    const MaschkeResult<Q> m = maschke(h);
    CHECK(m.semisimple);
    REQUIRE(m.normalized_integral.has_value());
    CHECK(*m.normalized_integral == Vec<Q>(Vec<Q>::Ones(6) * Q(1, 6)));
  }

  TEST_CASE("dual pairs") {
    std::mt19937 rng(31);
    for (const H& h : frobenius_examples()) {
      const DualPair<Q> p = find_dual_pair(h);
      CHECK(is_nondegenerate(h, p.ell));
      CHECK(lact(h, p.lambda, p.ell) == h.unit());
      CHECK(lact_dual(h, p.ell, p.lambda) == h.counit());
      CHECK(invariance_check(h, p.lambda).ok());
      CHECK(antipode_from_integrals(h, p) == Mat<Q>(h.antipode().transpose()));
      const Mat<Q> t = oracle::random_matrix(rng, h.dim(), h.dim(), 3);
      CHECK(trace_via_integrals(h, p, t) == trace(t));
    }
    const H h = group_algebra<Q>(cyclic_group(2));
    CHECK(!is_nondegenerate(h, Vec<Q>(Vec<Q>::Zero(2))));
  }

  TEST_CASE("Maschke agrees with the trace form") {
    for (const H& h : frobenius_examples()) {
      CHECK(trace_form(h) == oracle::trace_form(h));
      CHECK(maschke(h).semisimple == trace_form_semisimple(h));
    }
    const H sw = with_antipode(sweedler_algebra<Q>());
    CHECK(!maschke(sw).semisimple);
    CHECK(!maschke(sw).normalized_integral.has_value());
    CHECK(!trace_form_semisimple(sw));
  }

  TEST_CASE("missing integrals are reported") {
    CHECK(error_code_of([] { (void)find_nondegenerate_integral(truncated_polynomial()); }) == ErrorCode::NotFrobenius);
  }
}

TEST_SUITE("grouplikes") {
  TEST_CASE("group-like elements") {
    const H pair2 = groupoid_algebra<Q>(pair_groupoid(2));
    CHECK(is_grouplike(pair2, pair2.unit()));
    // pair groupoid basis: m11, m12, m21, m22
    const Vec<Q> swap = pair2.basis(1) + pair2.basis(2);
    CHECK(is_grouplike(pair2, swap));
    CHECK(!is_grouplike(pair2, pair2.basis(1)));
    CHECK(is_trivial_grouplike(pair2, pair2.unit()).decision == Decision::Yes);
    CHECK(is_trivial_grouplike(pair2, swap).decision == Decision::No);
    CHECK(!coset_equal(pair2, swap, pair2.unit()));
    CHECK(coset_equal(pair2, swap, swap));
    CHECK(error_code_of([&] { (void)is_trivial_grouplike(pair2, pair2.basis(1)); }) == ErrorCode::PreconditionUnmet);
    // counit is group-like in the dual
    CHECK(is_dual_grouplike(pair2, pair2.counit()));
  }

  TEST_CASE("trivial group-likes of a minimal algebra") {
    const H h = minimal_wha(diagonal_presentation<Q>({2}, {Q(1), Q(1)}));
    const auto res = is_trivial_grouplike(h, h.unit());
    CHECK(res.decision == Decision::Yes);
    REQUIRE(res.witness.has_value());
    const Vec<Q>& y = *res.witness;
    CHECK(h.mul(h.apply_S(y), h.invert_element(y)) == h.unit());
  }

  TEST_CASE("invertible search") {
    const H h = group_algebra<Q>(cyclic_group(2));
    const Subspace<Q> all = Subspace<Q>::whole(2);
    Mat<Q> degenerate(2, 1);
    degenerate << Q(1), Q(-1);
    CHECK(find_invertible_in_span(h, all, degenerate).decision == Decision::No);
    Mat<Q> both(2, 2);
    both << Q(1), Q(0), Q(-1), Q(1);
    const auto found = find_invertible_in_span(h, all, both);
    REQUIRE(found.decision == Decision::Yes);
    CHECK(h.is_invertible(*found.witness));
  }

  TEST_CASE("distinguished group-likes of a unimodular algebra") {
    const H h = group_algebra<Q>(symmetric_group3());
    const auto dp = distinguished_pair(h, find_dual_pair(h));
    CHECK(dp.alpha == h.counit());
    CHECK(dp.a == h.unit());
    CHECK(radford_check(h, dp).ok());
    CHECK(lambda_ell_relations(h, dp).ok());
  }

  TEST_CASE("distinguished group-likes of Sweedler's algebra") {
    const H h = with_antipode(sweedler_algebra<Q>());
    const auto dp = distinguished_pair(h, find_dual_pair(h));
    CHECK(is_grouplike(h, dp.a));
    CHECK(dp.a == h.basis(1));
    CHECK(is_dual_grouplike(h, dp.alpha));
    CHECK(dp.alpha(1) == Q(-1));
    CHECK(radford_check(h, dp).ok());
    CHECK(lambda_ell_relations(h, dp).ok());
    const Mat<Q> s2 = h.antipode() * h.antipode();
    CHECK(s2 != Mat<Q>::Identity(4, 4));
    CHECK(Mat<Q>(s2 * s2) == Mat<Q>::Identity(4, 4));
    const AntipodeOrder order = antipode_order_report(h);
    REQUIRE(order.order.has_value());
    CHECK(*order.order == 1);
  }

  TEST_CASE("Radford holds on the standard examples") {
    for (const H& h : frobenius_examples()) {
      if (!is_regular(h)) continue;
      const auto dp = distinguished_pair(h, find_dual_pair(h));
      CHECK(radford_check(h, dp).ok());
    }
  }

  TEST_CASE("conjugation automorphisms") {
    const H s3 = group_algebra<Q>(symmetric_group3());
    const Mat<Q> conj = grouplike_automorphism(s3, s3.basis(1));
    CHECK(check_wha_morphism(s3, conj).ok());
    CHECK(is_trivial_automorphism(s3, conj).decision == Decision::No);
    CHECK(is_trivial_automorphism(s3, Mat<Q>(Mat<Q>::Identity(6, 6))).decision == Decision::Yes);
    const H z3 = group_algebra<Q>(cyclic_group(3));
    CHECK(grouplike_automorphism(z3, z3.basis(1)) == Mat<Q>::Identity(3, 3));
    CHECK(error_code_of([&] { (void)grouplike_automorphism(s3, Vec<Q>(s3.basis(1) + s3.basis(2))); }) ==
          ErrorCode::PreconditionUnmet);
  }

  TEST_CASE("gamma modules") {
    const H pair2 = groupoid_algebra<Q>(pair_groupoid(2));
    const auto iso = gamma_module_iso(pair2, pair2.counit(), pair2.counit());
    CHECK(iso.decision == Decision::Yes);
    const auto sub = counital_subalgebras(pair2);
    CHECK(self_intertwiners(pair2, pair2.counit()).dim() == sub.ZcapHs.dim());
    const auto tw = twisted_integral_spaces(pair2, pair2.counit());
    CHECK(tw.left == integral_space(pair2, Side::Left));
    CHECK(tw.right == integral_space(pair2, Side::Right));
  }
}
