#include <doctest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "whopf/constructors.hpp"
#include "whopf/io.hpp"
#include "whopf/report.hpp"
#include "whopf/zoo.hpp"

using namespace whopf;
using oracle::error_code_of;
using Q = Rational;
using C = Cyclotomic;
using H = WeakHopfAlgebra<Q>;

namespace {

std::string parse_error_message(const json& doc) {
  try {
    (void)parse_document(doc);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("documents round trip") {
    for (const ZooMember& m : zoo_members()) {
      CAPTURE(m.name);
      std::visit(
          [&](const auto& h) {
            using S = typename std::decay_t<decltype(h)>::Scalar;
            const json doc = to_json(h);
            const auto back = wha_from_json<S>(doc);
            CHECK(back == h);
            CHECK(back.labels() == h.labels());
            CHECK(back.metadata() == h.metadata());
            const std::string text = emit_json(doc);
            CHECK(emit_json(to_json(back)) == text);
            CHECK(emit_json(parse_json_text(text)) == text);
          },
          m.algebra);
    }
  }

  TEST_CASE("the field selects the scalar type") {
    const H h = group_algebra<Q>(cyclic_group(2));
    CHECK(std::holds_alternative<H>(parse_document(to_json(h))));
    const auto c = group_algebra<C>(cyclic_group(3), FieldSpec::cyclotomic(3));
    CHECK(std::holds_alternative<WeakHopfAlgebra<C>>(parse_document(to_json(c))));
    CHECK(parse_field("Q") == FieldSpec::rational());
    CHECK(parse_field("Q(zeta_5)") == FieldSpec::cyclotomic(5));
    CHECK(error_code_of([] { (void)parse_field("R"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("parse errors name the offending path") {
    const json good = to_json(group_algebra<Q>(cyclic_group(2)));
    json bad_index = good;
    bad_index["mult"][1][2] = 7;
    CHECK(parse_error_message(bad_index).find("mult[1]") != std::string::npos);
    json bad_scalar = good;
    bad_scalar["counit"][0][1] = "one";
    CHECK(parse_error_message(bad_scalar).find("counit[0]") != std::string::npos);
    json missing = good;
    missing.erase("comult");
    CHECK(parse_error_message(missing).find("comult") != std::string::npos);
    json not_string = good;
    not_string["unit"][0][1] = 1;
    CHECK(parse_error_message(not_string).find("unit[0]") != std::string::npos);
    CHECK(error_code_of([] { (void)parse_json_text("{\"dim\": "); }) == ErrorCode::ParseError);
  }

  TEST_CASE("antipode encoding") {
    const H h = groupoid_algebra<Q>(pair_groupoid(2));
    const json doc = to_json(h);
    // S(m12) = m21: entry [1, 2, "1"]
    bool found = false;
    for (const auto& e : doc["antipode"])
      if (e[0] == 1 && e[1] == 2 && e[2] == "1") found = true;
    CHECK(found);
    json none = doc;
    none.erase("antipode");
    const H back = wha_from_json<Q>(none);
    CHECK(!back.has_antipode());
  }

  TEST_CASE("twists round trip") {
    const H h = groupoid_algebra<Q>(pair_groupoid(2));
    const Twist<Q> t{h.delta_one(), h.delta_one()};
    const Twist<Q> back = twist_from_json<Q>(twist_to_json(h, t), h);
    CHECK(back.theta == t.theta);
    CHECK(back.theta_bar == t.theta_bar);
  }

  TEST_CASE("dynamical data round trip") {
    for (const auto& d : {z2_dynamical_data(), z2_gauge_dynamical_data()}) {
      const auto back = dynamical_from_json<Q>(dynamical_to_json(d));
      CHECK(back.u == d.u);
      CHECK(back.group == d.group);
      CHECK(back.j == d.j);
    }
    json doc = dynamical_to_json(z2_gauge_dynamical_data());
    doc.erase("j");
    CHECK(dynamical_from_json<Q>(doc).j == z2_dynamical_data().j);
  }

  TEST_CASE("emitted text is stable") {
    const json doc = to_json(groupoid_algebra<Q>(pair_groupoid(2)));
    const std::string text = emit_json(doc);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"basis\": [\"m11\", \"m12\", \"m21\", \"m22\"]") != std::string::npos);
    CHECK(text.find("    [0, 0, 0, \"1\"]") != std::string::npos);
  }
}

TEST_SUITE("zoo") {
  TEST_CASE("members are named uniquely and validate") {
    std::set<std::string> names;
    for (const ZooMember& m : zoo_members()) {
      CHECK(names.insert(m.name).second);
      std::visit([&](const auto& h) { CHECK(validate(h).ok()); }, m.algebra);
    }
    CHECK(names.count("pair2") == 1);
    CHECK(names.count("dyn-twisted") == 1);
    CHECK(error_code_of([] { (void)zoo_member("no-such-member"); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("minimal members are generated by their unit") {
    for (const ZooMember& m : zoo_members())
      std::visit(
          [&](const auto& h) {
            CAPTURE(m.name);
            CHECK((counital_subalgebras(h).Hmin.dim() == h.dim()) == m.minimal);
          },
          m.algebra);
  }

  TEST_CASE("reports") {
    const H pair2 = groupoid_algebra<Q>(pair_groupoid(2));
    const Report r = build_report(pair2, ReportSections::all());
    CHECK(r.complete);
    CHECK(r.body["dim"] == 4);
    CHECK(r.body["traces"]["tr_s2"] == "4");
    CHECK(r.body["radford"]["residual"] == "0");
    CHECK(r.body["integrals"]["semisimple"] == true);
    CHECK(r.body["dual"]["traces"]["tr_s2"] == "4");
    const json dyn = dynamical_report_json(dynamical_cosemisimplicity_check(z2_dynamical_data()));
    CHECK(dyn["dim"] == 8);
    CHECK(dyn["tr_s2"] == "8");
    CHECK(dyn["ok"] == true);
  }

  TEST_CASE("failing sections are embedded") {
    H h(FieldSpec::rational(), {"1", "x"});
    h.add_mult(0, 0, 0, Q(1));
    h.add_mult(0, 1, 1, Q(1));
    h.add_mult(1, 0, 1, Q(1));
    h.add_comult(0, 0, 0, Q(1));
    h.set_unit(unit_vector<Q>(2, 0));
    h.set_counit(Vec<Q>::Ones(2));
    ReportSections s;
    s.integrals = true;
    const Report r = build_report(h, s);
    CHECK(!r.complete);
    CHECK(r.body["integrals"]["error"] == "NotFrobenius");
  }
}
