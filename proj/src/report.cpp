#include "whopf/report.hpp"

namespace whopf {

namespace {

template <class S>
std::string fmt(const S& x) {
  return FieldOps<S>::format(x);
}

// First failing residual, or "0".
std::string residual(const ValidationReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return c.residual.empty() ? c.name : c.residual;
  return "0";
}

template <class S>
json blocks_json(const std::optional<std::vector<BlockTrace<S>>>& blocks) {
  if (!blocks) return nullptr;
  json out = json::array();
  for (const auto& b : *blocks) out.push_back(json{{"label", b.label}, {"idempotent", sparse_vector(b.idempotent)}, {"trace", fmt(b.trace)}});
  return out;
}

template <class F>
void section(Report& r, json& into, const char* name, F&& body) {
  try {
    into[name] = body();
  } catch (const Error& e) {
    into[name] = error_json(e);
    r.complete = false;
  }
}

}  // namespace

json error_json(const Error& e) {
  return json{{"error", std::string(e.name())}, {"message", e.what()}};
}

template <class S>
json integrals_json(const WeakHopfAlgebra<S>& h) {
  json out;
  const int ht = counital_subalgebras(h).Ht.dim();
  out["left_integrals_dim"] = integral_space(h, Side::Left).dim();
  out["right_integrals_dim"] = integral_space(h, Side::Right).dim();
  out["target_base_dim"] = ht;
  const MaschkeResult<S> m = maschke(h);
  out["semisimple"] = m.semisimple;
  out["normalized_integral"] = m.normalized_integral ? sparse_vector(*m.normalized_integral) : json(nullptr);
  const DualPair<S> pair = find_dual_pair(h);
  out["ell"] = sparse_vector(pair.ell);
  out["lambda"] = sparse_vector(pair.lambda);
  out["invariance"] = report_to_json(invariance_check(h, pair.lambda));
  antipode_from_integrals(h, pair);
  out["antipode_from_integrals"] = "matches";
  return out;
}

template <class S>
json distinguished_json(const WeakHopfAlgebra<S>& h) {
  json out;
  const DistinguishedPair<S> dp = distinguished_pair(h, find_dual_pair(h));
  out["alpha"] = sparse_vector(dp.alpha);
  out["a"] = sparse_vector(dp.a);
  out["a_trivial"] = decision_name(is_trivial_grouplike(h, dp.a).decision);
  out["alpha_module_trivial"] = decision_name(gamma_module_iso(h, dp.alpha, h.counit()).decision);
  out["relations"] = report_to_json(lambda_ell_relations(h, dp));
  const AntipodeOrder order = antipode_order_report(h);
  out["antipode_order"] = json{{"order", order.order ? json(*order.order) : json(nullptr)}, {"bound", order.bound}};
  return out;
}

template <class S>
json radford_json(const WeakHopfAlgebra<S>& h) {
  const DistinguishedPair<S> dp = distinguished_pair(h, find_dual_pair(h));
  const ValidationReport rep = radford_check(h, dp);
  return json{{"residual", residual(rep)}, {"checks", report_to_json(rep)}};
}

template <class S>
json traces_json(const WeakHopfAlgebra<S>& h) {
  const TraceReport<S> r = semisimplicity_report(h);
  json out;
  out["tr_s2"] = fmt(r.tr_s2_direct);
  out["tr_s2_formula"] = r.tr_s2_formula ? json(fmt(*r.tr_s2_formula)) : json(nullptr);
  out["source_blocks"] = blocks_json(r.source_blocks);
  out["dual_blocks"] = blocks_json(r.dual_blocks);
  out["min_blocks"] = blocks_json(r.min_blocks);
  out["connected"] = r.connectivity.connected;
  out["biconnected"] = r.connectivity.biconnected;
  out["regular"] = r.regular;
  out["dual_regular"] = r.dual_regular;
  out["semisimple"] = r.semisimple;
  out["cosemisimple"] = r.cosemisimple;
  out["trace_form_agrees"] = r.trace_form_agrees;
  json imps = json::array();
  for (const auto& i : r.implications)
    imps.push_back(json{{"name", i.name},
                        {"hypothesis", i.hypothesis ? json(*i.hypothesis) : json(nullptr)},
                        {"conclusion", i.conclusion},
                        {"holds", i.holds()}});
  out["implications"] = imps;
  out["ok"] = r.ok();
  return out;
}

template <class S>
json dynamical_report_json(const DynamicalReport<S>& r) {
  json out;
  out["dim"] = r.dim;
  out["tr_s2"] = fmt(r.tr_s2_direct);
  if (r.blocks) {
    json blocks = json::array();
    for (const auto& b : *r.blocks)
      blocks.push_back(json{{"degree", b.degree}, {"trace_g", fmt(b.trace_g)}, {"trace_g_inverse", fmt(b.trace_g_inv)}});
    out["blocks"] = blocks;
  } else {
    out["blocks"] = nullptr;
  }
  out["target_base_dim"] = r.target_base_dim;
  out["source_base_dim"] = r.source_base_dim;
  out["biconnected"] = r.biconnected;
  out["regular"] = r.regular;
  out["dual_semisimple_by_trace_criterion"] = r.dual_semisimple_by_trace_criterion;
  out["dual_semisimple_by_maschke"] = r.dual_semisimple_by_maschke;
  out["dual_semisimple_by_trace_form"] = r.dual_semisimple_by_trace_form;
  out["ok"] = r.ok();
  return out;
}

template <class S>
Report build_report(const WeakHopfAlgebra<S>& h, const ReportSections& sections) {
  Report r;
  r.body = json::object();
  const auto name = h.metadata().find("name");
  r.body["name"] = name == h.metadata().end() ? json(nullptr) : json(name->second);
  r.body["dim"] = h.dim();
  r.body["field"] = h.field().to_string();
  auto fill = [&](const WeakHopfAlgebra<S>& x, json& into) {
    if (sections.integrals) section(r, into, "integrals", [&] { return integrals_json(x); });
    if (sections.grouplikes) section(r, into, "grouplikes", [&] { return distinguished_json(x); });
    if (sections.radford) section(r, into, "radford", [&] { return radford_json(x); });
    if (sections.traces) section(r, into, "traces", [&] { return traces_json(x); });
  };
  fill(h, r.body);
  if (sections.dual) {
    json d = json::object();
    fill(dualize(h), d);
    r.body["dual"] = d;
  }
  return r;
}

#define WHOPF_INSTANTIATE_REPORT(S)                                              \
  template json integrals_json<S>(const WeakHopfAlgebra<S>&);                    \
  template json distinguished_json<S>(const WeakHopfAlgebra<S>&);                \
  template json radford_json<S>(const WeakHopfAlgebra<S>&);                      \
  template json traces_json<S>(const WeakHopfAlgebra<S>&);                       \
  template json dynamical_report_json<S>(const DynamicalReport<S>&);             \
  template Report build_report<S>(const WeakHopfAlgebra<S>&, const ReportSections&);

WHOPF_INSTANTIATE_REPORT(Rational)
WHOPF_INSTANTIATE_REPORT(Cyclotomic)

}  // namespace whopf
