#include "whopf/zoo.hpp"

#include <set>
#include <sstream>

#include "whopf/constructors.hpp"
#include "whopf/error.hpp"
#include "whopf/grouplikes.hpp"
#include "whopf/search.hpp"
#include "whopf/semisimplicity.hpp"

namespace whopf {

namespace {

template <class S>
WeakHopfAlgebra<S> named(WeakHopfAlgebra<S> h, const std::string& name) {
  if (!h.has_antipode()) h = with_antipode(std::move(h));
  h.metadata()["name"] = name;
  return h;
}

template <class S>
WeakHopfAlgebra<S> dynamical_twisted(const DynamicalTwistData<S>& d) {
  const DynamicalTwist<S> dt = dynamical_theta(d);
  return twist(dt.host, dt.twist);
}

std::string failures(const ValidationReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += (out.empty() ? "" : "; ") + c.name + " residual " + c.residual;
  return out;
}

template <class F>
CaseResult run_case(const std::string& name, F&& body) {
  CaseResult c;
  c.name = name;
  try {
    const std::string detail = body();
    c.passed = detail.empty();
    c.detail = c.passed ? "ok" : detail;
  } catch (const Error& e) {
    c.detail = e.what();
  } catch (const std::exception& e) {
    c.detail = std::string("unexpected exception: ") + e.what();
  }
  return c;
}

template <class F>
void per_member(const std::vector<ZooMember>& zoo, CriterionResult& out, F&& body) {
  for (const ZooMember& m : zoo)
    out.cases.push_back(run_case(m.name, [&] { return std::visit([&](const auto& h) { return body(m, h); }, m.algebra); }));
}

template <class S>
std::string fmt(const S& x) {
  return FieldOps<S>::format(x);
}

// Regular algebras are used as they are; the S^2 | H_min = id normal form otherwise.
template <class S>
WeakHopfAlgebra<S> regular_form(const WeakHopfAlgebra<S>& h) {
  return regularize(h).algebra;
}

// Independent of trace(): sum_i sum_k S(i,k) S(k,i).
template <class S>
S trace_of_square(const Mat<S>& s) {
  S acc(0);
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index k = 0; k < s.cols(); ++k) acc += s(i, k) * s(k, i);
  return acc;
}

CriterionResult axioms(const std::vector<ZooMember>& zoo) {
  CriterionResult r{1, "axiom suite on every zoo member", {}};
  per_member(zoo, r, [](const ZooMember&, const auto& h) -> std::string {
    if (!h.has_antipode()) return "no antipode";
    return failures(validate(h));
  });
  return r;
}

CriterionResult duality(const std::vector<ZooMember>& zoo) {
  CriterionResult r{2, "dualize is an involution; function algebras are duals of groupoid algebras", {}};
  per_member(zoo, r, [](const ZooMember&, const auto& h) -> std::string {
    return dualize(dualize(h)) == h ? "" : "dualize(dualize(H)) != H";
  });
  const std::vector<std::pair<std::string, GroupoidPresentation>> groupoids{
      {"Z/2", cyclic_group(2)},     {"S_3", symmetric_group3()}, {"pair(2)", pair_groupoid(2)},
      {"pair(3)", pair_groupoid(3)}, {"Z/2+Z/2", disjoint_union(cyclic_group(2), cyclic_group(2))}};
  for (const auto& [name, g] : groupoids)
    r.cases.push_back(run_case("functions(" + name + ")", [&]() -> std::string {
      return function_algebra<Rational>(g) == dualize(groupoid_algebra<Rational>(g)) ? "" : "function algebra differs from the dual";
    }));
  return r;
}

CriterionResult integrals(const std::vector<ZooMember>& zoo) {
  CriterionResult r{3, "integral dimensions, dual pairs and invariance", {}};
  per_member(zoo, r, [](const ZooMember&, const auto& h) -> std::string {
    const int li = integral_space(h, Side::Left).dim();
    const int ht = counital_subalgebras(h).Ht.dim();
    if (li != ht) return "dim left integrals " + std::to_string(li) + " != dim H_t " + std::to_string(ht);
    const auto pair = find_dual_pair(h);
    if (lact(h, pair.lambda, pair.ell) != h.unit()) return "lambda -> ell != 1";
    if (lact_dual(h, pair.ell, pair.lambda) != h.counit()) return "ell -> lambda != eps";
    return failures(invariance_check(h, pair.lambda));
  });
  return r;
}

CriterionResult antipode_relations(const std::vector<ZooMember>& zoo) {
  CriterionResult r{4, "antipode from integrals and the lambda-ell relations", {}};
  per_member(zoo, r, [](const ZooMember&, const auto& h) -> std::string {
    using S = typename std::decay_t<decltype(h)>::Scalar;
    const auto pair = find_dual_pair(h);
    if (antipode_from_integrals(h, pair) != Mat<S>(h.antipode().transpose())) return "antipode from integrals differs";
    const auto hr = regular_form(h);
    return failures(lambda_ell_relations(hr, distinguished_pair(hr, find_dual_pair(hr))));
  });
  return r;
}

CriterionResult radford(const std::vector<ZooMember>& zoo) {
  CriterionResult r{5, "S^4 formula after regularization; S^4 trivial for two-sided integrals", {}};
  per_member(zoo, r, [](const ZooMember&, const auto& h) -> std::string {
    using S = typename std::decay_t<decltype(h)>::Scalar;
    const auto hr = regular_form(h);
    const auto pair = find_dual_pair(hr);
    const auto dp = distinguished_pair(hr, pair);
    const std::string bad = failures(radford_check(hr, dp));
    if (!bad.empty()) return bad;
    const bool two_sided = integral_space(hr, Side::Right).contains(pair.ell) &&
                           integral_space(dualize(hr), Side::Right).contains(pair.lambda);
    if (!two_sided) return "";
    const Mat<S> s2 = hr.antipode() * hr.antipode();
    const auto res = is_trivial_automorphism(hr, Mat<S>(s2 * s2));
    return res.decision == Decision::Yes ? "" : std::string("S^4 is not a trivial automorphism: ") + decision_name(res.decision);
  });
  return r;
}

CriterionResult traces(const std::vector<ZooMember>& zoo) {
  CriterionResult r{6, "trace of S^2 by integrals equals the matrix trace", {}};
  const std::map<std::string, int> expected{{"qz2", 2}, {"pair2", 4}, {"dyn-twisted", 8}};
  per_member(zoo, r, [&](const ZooMember& m, const auto& h) -> std::string {
    using S = typename std::decay_t<decltype(h)>::Scalar;
    const auto t = trace_s2(h, find_dual_pair(h));
    const S oracle = trace_of_square<S>(h.antipode());
    if (!(t.direct == oracle)) return "matrix trace " + fmt(t.direct) + " != oracle " + fmt(oracle);
    if (!(t.formula == t.direct)) return "formula " + fmt(t.formula) + " != direct " + fmt(t.direct);
    if (const auto it = expected.find(m.name); it != expected.end() && !(oracle == S(it->second)))
      return "Tr(S^2) = " + fmt(oracle) + ", expected " + std::to_string(it->second);
    return "";
  });
  return r;
}

CriterionResult semisimplicity(const std::vector<ZooMember>& zoo) {
  CriterionResult r{7, "Maschke agrees with the trace form; trace criteria hold as implications", {}};
  auto body = [](const ZooMember&, const auto& h) -> std::string {
    const bool ms = maschke(h).semisimple;
    if (ms != trace_form_semisimple(h)) return "Maschke and trace form disagree";
    const auto report = semisimplicity_report(h);
    if (!report.trace_form_agrees) return "Maschke and trace form disagree on the dual";
    for (const auto& i : report.implications)
      if (!i.holds()) return "implication fails: " + i.name;
    if (report.tr_s2_formula && !(*report.tr_s2_formula == report.tr_s2_direct)) return "trace formula mismatch";
    const auto subs = counital_subalgebras(h);
    if (ms && subs.Ht == subs.Hs) return failures(coinciding_bases_check(h));
    return "";
  };
  per_member(zoo, r, body);
  r.cases.push_back(run_case("sweedler (negative control)", [&]() -> std::string {
    const auto h = named(sweedler_algebra<Rational>(), "sweedler");
    if (maschke(h).semisimple) return "Sweedler's algebra reported semisimple";
    return body(ZooMember{}, h);
  }));
  return r;
}

CriterionResult dynamical() {
  CriterionResult r{8, "dynamical twist of Q[Z/2]: biconnected, Tr = dim, cosemisimple", {}};
  r.cases.push_back(run_case("J = 1", []() -> std::string {
    const auto rep = dynamical_cosemisimplicity_check(z2_dynamical_data());
    if (rep.dim != 8) return "dim " + std::to_string(rep.dim);
    if (!(rep.tr_s2_direct == Rational(8))) return "Tr(S^2) = " + fmt(rep.tr_s2_direct);
    if (rep.target_base_dim != 2 || rep.source_base_dim != 2) return "base dimensions differ from |A| = 2";
    if (!rep.biconnected) return "not biconnected";
    if (!rep.dual_semisimple_by_trace_criterion) return "trace criterion does not apply";
    if (!rep.dual_semisimple_by_maschke) return "dual not semisimple by Maschke";
    if (!rep.dual_semisimple_by_trace_form) return "dual not semisimple by the trace form";
    return rep.ok() ? "" : "block traces of g differ from the degrees";
  }));
  r.cases.push_back(run_case("bases independent of J", []() -> std::string {
    const auto d1 = z2_dynamical_data();
    const auto d2 = z2_gauge_dynamical_data();
    if (d1.j == d2.j) return "the second J equals the first";
    const auto s1 = counital_subalgebras(dynamical_twisted(d1));
    const auto s2 = counital_subalgebras(dynamical_twisted(d2));
    if (!(s1.Ht == s2.Ht) || !(s1.Hs == s2.Hs)) return "bases depend on J";
    // (H_Theta)_s = span{E_bb (x) 1}, (H_Theta)_t = span{sum_l E_ll (x) P_(l - a)}
    const CharacterGroup chars = check_dynamical_data(d1);
    const auto p = character_idempotents(d1, chars);
    const int m = chars.size();
    const int du = d1.u.dim();
    const int n = m * m * du;
    Mat<Rational> src = Mat<Rational>::Zero(n, m), tgt = Mat<Rational>::Zero(n, m);
    for (int a = 0; a < m; ++a)
      for (int l = 0; l < m; ++l) {
        int shifted = 0;
        while (chars.sum[static_cast<std::size_t>(shifted)][static_cast<std::size_t>(a)] != l) ++shifted;
        for (int x = 0; x < du; ++x) {
          if (l == a) src((l * m + l) * du + x, a) = d1.u.unit()(x);
          tgt((l * m + l) * du + x, a) = p[static_cast<std::size_t>(shifted)](x);
        }
      }
    if (!(s1.Hs == Subspace<Rational>::span_columns(src))) return "source base is not span{E_bb}";
    if (!(s1.Ht == Subspace<Rational>::span_columns(tgt))) return "target base is not span{sum E_ll P_(l-a)}";
    return "";
  }));
  return r;
}

template <class S>
std::vector<Vec<S>> minimal_grouplikes(const WeakHopfAlgebra<S>& h) {
  // Group-likes t s with t in H_t, s in H_s of coordinate height 1.
  const auto subs = counital_subalgebras(h);
  const auto maps = counital_maps(h);
  const Mat<S> bt = subs.Ht.columns(), bs = subs.Hs.columns();
  std::vector<Vec<S>> ts, ss;
  enumerate_by_height(bt.cols(), 1, [&](const std::vector<int>& c) {
    Vec<S> v = Vec<S>::Zero(h.dim());
    for (Eigen::Index i = 0; i < bt.cols(); ++i) v += S(c[static_cast<std::size_t>(i)]) * bt.col(i);
    ts.push_back(v);
    return false;
  });
  enumerate_by_height(bs.cols(), 1, [&](const std::vector<int>& c) {
    Vec<S> v = Vec<S>::Zero(h.dim());
    for (Eigen::Index i = 0; i < bs.cols(); ++i) v += S(c[static_cast<std::size_t>(i)]) * bs.col(i);
    ss.push_back(v);
    return false;
  });
  std::set<std::vector<std::string>> seen;
  std::vector<Vec<S>> out;
  for (const auto& t : ts)
    for (const auto& s : ss) {
      const Vec<S> g = h.mul(t, s);
      if (maps.eps_t * g != h.unit() || maps.eps_s * g != h.unit()) continue;
      std::vector<std::string> key;
      for (Eigen::Index i = 0; i < g.size(); ++i) key.push_back(fmt(g(i)));
      if (!seen.insert(key).second) continue;
      if (is_grouplike(h, g)) out.push_back(g);
    }
  return out;
}

CriterionResult grouplikes(const std::vector<ZooMember>& zoo) {
  CriterionResult r{9, "group-likes, self-intertwiners and the shift of L_g", {}};
  r.cases.push_back(run_case("pair2 swap", []() -> std::string {
    const auto h = groupoid_algebra<Rational>(pair_groupoid(2));
    const Vec<Rational> swap = h.basis(1) + h.basis(2);
    if (!is_grouplike(h, swap)) return "swap is not group-like";
    const auto res = is_trivial_grouplike(h, swap);
    return res.decision == Decision::No ? "" : std::string("swap trivial: ") + decision_name(res.decision);
  }));
  for (const ZooMember& m : zoo) {
    if (!m.minimal) continue;
    r.cases.push_back(run_case(m.name + " group-likes", [&]() -> std::string {
      return std::visit(
          [](const auto& h) -> std::string {
            const auto found = minimal_grouplikes(h);
            if (found.empty()) return "no group-likes found";
            for (const auto& g : found) {
              const auto res = is_trivial_grouplike(h, g);
              if (res.decision != Decision::Yes) return std::string("non-trivial group-like: ") + decision_name(res.decision);
            }
            return "";
          },
          m.algebra);
    }));
  }
  per_member(zoo, r, [](const ZooMember&, const auto& h) -> std::string {
    const int si = self_intertwiners(h, h.counit()).dim();
    const int z = counital_subalgebras(h).ZcapHs.dim();
    const int d = counital_subalgebras(dualize(h)).HtCapHs.dim();
    if (si != z || si != d)
      return "self-intertwiners " + std::to_string(si) + ", Z(H)^H_s " + std::to_string(z) + ", H*_t^H*_s " + std::to_string(d);
    return "";
  });
  r.cases.push_back(run_case("pair2 L_g shift", []() -> std::string {
    const auto h = groupoid_algebra<Rational>(pair_groupoid(2));
    const Vec<Rational> swap = h.basis(1) + h.basis(2);
    const Vec<Rational> one = h.unit();
    for (const auto& [g, k] : std::vector<std::pair<Vec<Rational>, Vec<Rational>>>{{swap, swap}, {one, swap}, {swap, one}}) {
      const Vec<Rational> gk = h.mul(g, h.invert_element(k));
      const auto lg = twisted_integral_spaces_dual(h, g).left;
      const auto lgk = twisted_integral_spaces_dual(h, gk).left;
      if (lg.dim() != lgk.dim()) return "dim L_g " + std::to_string(lg.dim()) + " != dim L_gh^-1 " + std::to_string(lgk.dim());
      for (int i = 0; i < lg.dim(); ++i)
        if (!lgk.contains(lact_dual(h, k, lg.vector(i)))) return "h -> phi leaves L_gh^-1";
    }
    return "";
  }));
  return r;
}

std::vector<ZooMember> mutated_zoo(const SuiteOptions& options) {
  std::vector<ZooMember> zoo = zoo_members();
  if (!options.mutate) return zoo;
  bool found = false;
  for (ZooMember& m : zoo)
    if (m.name == *options.mutate) {
      found = true;
      std::visit(
          [](auto& h) {
            using S = typename std::decay_t<decltype(h)>::Scalar;
            Vec<S> c = h.counit();
            c(0) += S(1);
            h.set_counit(c);
          },
          m.algebra);
    }
  if (!found) throw Error(ErrorCode::InvalidArgument, "no zoo member named " + *options.mutate);
  return zoo;
}

std::vector<CriterionResult> first_nine(const std::vector<ZooMember>& zoo) {
  return {axioms(zoo), duality(zoo), integrals(zoo), antipode_relations(zoo), radford(zoo),
          traces(zoo), semisimplicity(zoo), dynamical(), grouplikes(zoo)};
}

}  // namespace

DynamicalTwistData<Rational> z2_dynamical_data() {
  const auto u = named(group_algebra<Rational>(cyclic_group(2)), "qz2");
  return trivial_dynamical_data(u, {u.basis(0), u.basis(1)});
}

DynamicalTwistData<Rational> z2_gauge_dynamical_data() {
  const auto u = named(group_algebra<Rational>(cyclic_group(2)), "qz2");
  return gauge_dynamical_data<Rational>(u, {u.basis(0), u.basis(1)}, {{Rational(1), Rational(2)}, {Rational(1), Rational(3)}});
}

std::vector<ZooMember> zoo_members() {
  std::vector<ZooMember> z;
  const FieldSpec q3 = FieldSpec::cyclotomic(3);
  z.push_back({"qz2", named(group_algebra<Rational>(cyclic_group(2)), "qz2")});
  z.push_back({"qz3-cyclotomic", named(group_algebra<Cyclotomic>(cyclic_group(3), q3), "qz3-cyclotomic")});
  z.push_back({"qs3", named(group_algebra<Rational>(symmetric_group3()), "qs3")});
  z.push_back({"pair2", named(groupoid_algebra<Rational>(pair_groupoid(2)), "pair2")});
  z.push_back({"pair3", named(groupoid_algebra<Rational>(pair_groupoid(3)), "pair3")});
  z.push_back({"pair2-dual", named(dualize(groupoid_algebra<Rational>(pair_groupoid(2))), "pair2-dual"), true});
  z.push_back({"pair3-dual", named(dualize(groupoid_algebra<Rational>(pair_groupoid(3))), "pair3-dual"), true});
  z.push_back({"z2+z2", named(groupoid_algebra<Rational>(disjoint_union(cyclic_group(2), cyclic_group(2))), "z2+z2")});
  z.push_back({"hmin-q+q", named(minimal_wha(diagonal_presentation<Rational>({1, 1}, {Rational(1), Rational(1)})), "hmin-q+q"), true});
  z.push_back({"hmin-m2", named(minimal_wha(diagonal_presentation<Rational>({2}, {Rational(1), Rational(1)})), "hmin-m2"), true});
  z.push_back({"hmin-m2-g", named(minimal_wha(diagonal_presentation<Rational>({2}, {Rational(3), Rational(-1)})), "hmin-m2-g"), true});
  const auto d = z2_dynamical_data();
  z.push_back({"dyn-host", named(dynamical_host(d), "dyn-host")});
  z.push_back({"dyn-twisted", named(dynamical_twisted(d), "dyn-twisted")});
  return z;
}

ZooMember zoo_member(const std::string& name) {
  std::string known;
  for (ZooMember& m : zoo_members()) {
    if (m.name == name) return m;
    known += (known.empty() ? "" : ", ") + m.name;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown zoo member \"" + name + "\"; known: " + known);
}

bool CriterionResult::passed() const {
  for (const auto& c : cases)
    if (!c.passed) return false;
  return !cases.empty();
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  const std::vector<ZooMember> zoo = mutated_zoo(options);
  std::vector<CriterionResult> results = first_nine(zoo);
  CriterionResult det{10, "two runs produce byte-identical reports", {}};
  det.cases.push_back(run_case("rerun", [&]() -> std::string {
    const std::string a = suite_to_json(results).dump();
    const std::string b = suite_to_json(first_nine(mutated_zoo(options))).dump();
    return a == b ? "" : "reports differ between runs";
  }));
  results.push_back(det);
  return results;
}

json suite_to_json(const std::vector<CriterionResult>& results) {
  json criteria = json::array();
  bool all = true;
  for (const auto& r : results) {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    criteria.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"cases", cases}});
    all = all && r.passed();
  }
  return json{{"passed", all}, {"criteria", criteria}};
}

std::string suite_summary(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& r : results) {
    int ok = 0;
    for (const auto& c : r.cases) ok += c.passed ? 1 : 0;
    out << (r.passed() ? "PASS " : "FAIL ") << r.id << ". " << r.title << " (" << ok << "/" << r.cases.size() << ")\n";
    for (const auto& c : r.cases)
      if (!c.passed) out << "       " << c.name << ": " << c.detail << "\n";
    failed += r.passed() ? 0 : 1;
  }
  out << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return out.str();
}

}  // namespace whopf
