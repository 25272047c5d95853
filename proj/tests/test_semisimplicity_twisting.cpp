#include <doctest.h>

#include "oracles.hpp"
#include "whopf/constructors.hpp"
#include "whopf/grouplikes.hpp"
#include "whopf/semisimplicity.hpp"
#include "whopf/twisting.hpp"
#include "whopf/zoo.hpp"

using namespace whopf;
using oracle::error_code_of;
using Q = Rational;
using C = Cyclotomic;
using H = WeakHopfAlgebra<Q>;

namespace {

H hmin_g() { return minimal_wha(diagonal_presentation<Q>({2}, {Q(3), Q(-1)})); }

template <class S>
void check_complete_idempotents(const WeakHopfAlgebra<S>& h, const std::vector<Vec<S>>& p) {
  Vec<S> sum = Vec<S>::Zero(h.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += p[i];
    CHECK(h.mul(p[i], p[i]) == p[i]);
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j) CHECK(is_zero_vector(Vec<S>(h.mul(p[i], p[j]))));
  }
  CHECK(sum == h.unit());
}

}  // namespace

TEST_SUITE("semisimplicity") {
  TEST_CASE("trace of the squared antipode") {
    struct Expected {
      H h;
      Q value;
    };
    const std::vector<Expected> cases = {{group_algebra<Q>(cyclic_group(2)), Q(2)},
                                         {groupoid_algebra<Q>(pair_groupoid(2)), Q(4)},
                                         {group_algebra<Q>(symmetric_group3()), Q(6)},
                                         {dualize(groupoid_algebra<Q>(pair_groupoid(3))), Q(9)}};
    for (const auto& c : cases) {
      const TraceS2<Q> t = trace_s2(c.h, find_dual_pair(c.h));
      CHECK(t.direct == c.value);
      CHECK(t.formula == c.value);
      CHECK(oracle::trace_of_square(c.h.antipode()) == c.value);
    }
    const H g = hmin_g();
    const TraceS2<Q> t = trace_s2(g, find_dual_pair(g));
    CHECK(t.direct == oracle::trace_of_square(g.antipode()));
    CHECK(compressed_trace_s2(g, Mat<Q>(Mat<Q>::Identity(g.dim(), g.dim()))) == t.direct);
  }

  TEST_CASE("primitive idempotents of the center") {
    const H z2 = group_algebra<Q>(cyclic_group(2));
    const auto p = primitive_idempotents(z2, center(z2));
    CHECK(p.size() == 2);
    check_complete_idempotents(z2, p);
    const H z3 = group_algebra<Q>(cyclic_group(3));
    CHECK(error_code_of([&] { (void)primitive_idempotents(z3, center(z3)); }) == ErrorCode::NonSplit);
    const auto cz3 = group_algebra<C>(cyclic_group(3), FieldSpec::cyclotomic(3));
    const auto pc = primitive_idempotents(cz3, center(cz3));
    CHECK(pc.size() == 3);
    check_complete_idempotents(cz3, pc);
    const H s3 = group_algebra<Q>(symmetric_group3());
    const auto ps = primitive_idempotents(s3, center(s3));
    CHECK(ps.size() == 3);
    check_complete_idempotents(s3, ps);
  }

  TEST_CASE("connectedness") {
    const auto hopf = connectedness(group_algebra<Q>(cyclic_group(2)));
    CHECK(hopf.connected);
    CHECK(hopf.biconnected);
    const auto pair2 = connectedness(groupoid_algebra<Q>(pair_groupoid(2)));
    CHECK(pair2.connected);
    CHECK(!pair2.biconnected);
    CHECK(pair2.dual_center_source_dim == 2);
    const auto u = connectedness(groupoid_algebra<Q>(disjoint_union(cyclic_group(2), cyclic_group(2))));
    CHECK(!u.connected);
  }

  TEST_CASE("reports are consistent") {
    for (const H& h : {group_algebra<Q>(symmetric_group3()), groupoid_algebra<Q>(pair_groupoid(2)), hmin_g(),
                       with_antipode(sweedler_algebra<Q>())}) {
      const TraceReport<Q> r = semisimplicity_report(h);
      CHECK(r.ok());
      CHECK(r.tr_s2_direct == oracle::trace_of_square(h.antipode()));
      for (const auto& i : r.implications) {
        CAPTURE(i.name);
        CHECK(i.holds());
      }
    }
    const TraceReport<Q> sw = semisimplicity_report(with_antipode(sweedler_algebra<Q>()));
    CHECK(!sw.semisimple);
    CHECK(!sw.cosemisimple);
    CHECK(sw.tr_s2_direct == Q(0));
    const TraceReport<Q> s3 = semisimplicity_report(group_algebra<Q>(symmetric_group3()));
    CHECK(s3.semisimple);
    CHECK(s3.cosemisimple);
    CHECK(s3.regular);
  }

  TEST_CASE("coinciding bases") {
    CHECK(coinciding_bases_check(groupoid_algebra<Q>(pair_groupoid(2))).ok());
    CHECK(coinciding_bases_check(groupoid_algebra<Q>(pair_groupoid(3))).ok());
    CHECK(error_code_of([] { (void)coinciding_bases_check(with_antipode(sweedler_algebra<Q>())); }) ==
          ErrorCode::PreconditionUnmet);
  }
}

TEST_SUITE("twisting") {
  TEST_CASE("base deformation round trip") {
    const H h = hmin_g();
    const MinimalData<Q> m = minimal_data(h);
    const H hq = deform_q(h, m.g_inverse);
    CHECK(validate(hq).ok());
    CHECK(is_regular(hq));
    CHECK(deform_q(hq, m.g) == h);
    CHECK(deform_q(h, h.unit()) == h);
    CHECK(error_code_of([&] { (void)deform_q(h, Vec<Q>(h.unit() * Q(2))); }) == ErrorCode::PreconditionUnmet);
  }

  TEST_CASE("regularization") {
    const H h = hmin_g();
    const Regularized<Q> r = regularize(h);
    CHECK(is_regular(r.algebra));
    CHECK(r.q != h.unit());
    const Regularized<Q> again = regularize(r.algebra);
    CHECK(again.q == r.algebra.unit());
    CHECK(again.algebra == r.algebra);
    const H pair2 = groupoid_algebra<Q>(pair_groupoid(2));
    CHECK(regularize(pair2).algebra == pair2);
    const auto dp = distinguished_pair(r.algebra, find_dual_pair(r.algebra));
    CHECK(radford_check(r.algebra, dp).ok());
  }

  TEST_CASE("trivial twist") {
    for (const H& h : {groupoid_algebra<Q>(pair_groupoid(2)), group_algebra<Q>(symmetric_group3()), hmin_g()}) {
      const Twist<Q> t{h.delta_one(), h.delta_one()};
      CHECK(check_twist(h, t).ok());
      CHECK(twist_v(h, t) == h.unit());
      CHECK(twist(h, t) == h);
    }
  }

  TEST_CASE("non-twists are rejected") {
    const H h = groupoid_algebra<Q>(pair_groupoid(2));
    const Twist<Q> t{Mat<Q>(h.delta_one() * Q(2)), h.delta_one()};
    const ValidationReport r = check_twist(h, t);
    CHECK(!r.ok());
    REQUIRE(r.find("theta_theta_bar_is_delta1") != nullptr);
    CHECK(!r.find("theta_theta_bar_is_delta1")->passed);
    CHECK(error_code_of([&] { (void)twist(h, t); }) == ErrorCode::NotATwist);
  }

  TEST_CASE("bicharacter twist of an abelian group algebra") {
    // Z2 x Z2 with J = sum (-1)^(chi_1 psi_2) P_chi (x) P_psi; J^-1 = J
    const H h = group_algebra<Q>(
        group_groupoid({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {"e", "a", "b", "ab"}));
    // characters indexed by (c1, c2): value on a^i b^j is (-1)^(c1 i + c2 j)
    std::vector<Vec<Q>> p;
    for (int c = 0; c < 4; ++c) {
      Vec<Q> v(4);
      for (int g = 0; g < 4; ++g) {
        const int i = g % 2, j = g / 2;
        v(g) = ((c % 2) * i + (c / 2) * j) % 2 ? Q(-1, 4) : Q(1, 4);
      }
      p.push_back(v);
    }
    Mat<Q> j = Mat<Q>::Zero(4, 4);
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        const Q sign = ((c % 2) * (d / 2)) % 2 ? Q(-1) : Q(1);
        j += sign * (p[static_cast<std::size_t>(c)] * p[static_cast<std::size_t>(d)].transpose());
      }
    CHECK(h.mul_tensor(j, j) == h.delta_one());
    const Twist<Q> t{j, j};
    CHECK(check_twist(h, t).ok());
    const H ht = twist(h, t);
    CHECK(validate(ht).ok());
    // a commutative algebra: conjugating Delta changes nothing
    CHECK(ht == h);
  }

  TEST_CASE("character groups") {
    const CharacterGroup z2 = character_group({{0, 1}, {1, 0}});
    CHECK(z2.size() == 2);
    CHECK(z2.exponent == 2);
    const CharacterGroup v4 = character_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    CHECK(v4.size() == 4);
    CHECK(v4.exponent == 2);
    const CharacterGroup z3 = character_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(z3.size() == 3);
    CHECK(z3.exponent == 3);
    for (int l = 0; l < z3.size(); ++l)
      for (int m = 0; m < z3.size(); ++m)
        for (int a = 0; a < 3; ++a) {
          const auto& pw = z3.powers;
          const int s = z3.sum[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
          CHECK((pw[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)] +
                 pw[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)]) % 3 ==
                pw[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)] % 3);
        }
  }

  TEST_CASE("dynamical twist over Z2") {
    for (const auto& d : {z2_dynamical_data(), z2_gauge_dynamical_data()}) {
      const CharacterGroup chars = check_dynamical_data(d);
      CHECK(chars.size() == 2);
      check_complete_idempotents(d.u, character_idempotents(d, chars));
      const DynamicalTwist<Q> dt = dynamical_theta(d);
      CHECK(dt.host.dim() == 8);
      CHECK(validate(dt.host).ok());
      CHECK(check_twist(dt.host, dt.twist).ok());
      const H ht = twist(dt.host, dt.twist);
      CHECK(validate(ht).ok());
      CHECK(oracle::trace_of_square(ht.antipode()) == Q(8));
      const DynamicalReport<Q> r = dynamical_cosemisimplicity_check(d);
      CHECK(r.ok());
      CHECK(r.dim == 8);
      CHECK(r.tr_s2_direct == Q(8));
      CHECK(r.target_base_dim == 2);
      CHECK(r.source_base_dim == 2);
      CHECK(r.biconnected);
      CHECK(r.dual_semisimple_by_trace_criterion);
      CHECK(r.dual_semisimple_by_maschke);
      CHECK(r.dual_semisimple_by_trace_form);
    }
  }

  TEST_CASE("dynamical data is checked") {
    auto bad = z2_dynamical_data();
    bad.j[1] = Mat<Q>(bad.j[1] * Q(2));
    CHECK(error_code_of([&] { (void)check_dynamical_data(bad); }) == ErrorCode::DynamicalEquationViolated);
    const H z3 = group_algebra<Q>(cyclic_group(3));
    const auto d3 = trivial_dynamical_data(z3, {z3.basis(0), z3.basis(1), z3.basis(2)});
    CHECK(error_code_of([&] { (void)check_dynamical_data(d3); }) == ErrorCode::FieldTooSmall);
  }

  TEST_CASE("dynamical twist over Z3 in Q(zeta_3)") {
    const auto u = group_algebra<C>(cyclic_group(3), FieldSpec::cyclotomic(3));
    const auto d = trivial_dynamical_data(u, {u.basis(0), u.basis(1), u.basis(2)});
    const DynamicalReport<C> r = dynamical_cosemisimplicity_check(d);
    CHECK(r.dim == 27);
    CHECK(r.tr_s2_direct == C(27));
    CHECK(r.ok());
  }
}
