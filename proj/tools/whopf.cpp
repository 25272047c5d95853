#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "whopf/constructors.hpp"
#include "whopf/error.hpp"
#include "whopf/report.hpp"
#include "whopf/zoo.hpp"

using namespace whopf;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) { return parse_json_text(read_text(path)); }

// Inline JSON if it looks like JSON, otherwise a path.
json inline_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return parse_json_text(arg);
  return read_json(arg);
}

void write_json(const json& doc, const std::string& out) {
  const std::string text = emit_json(doc);
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  f << text;
}

template <class S>
WeakHopfAlgebra<S> ensure_antipode(WeakHopfAlgebra<S> h) {
  return h.has_antipode() ? h : with_antipode(std::move(h));
}

template <class S>
std::vector<S> parse_scalars(const std::string& list, const FieldSpec& field) {
  std::vector<S> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(FieldOps<S>::parse(item, field));
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty scalar list");
  return out;
}

std::vector<int> parse_ints(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "not an integer: \"" + item + "\"");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer list");
  return out;
}

struct MakeOptions {
  std::string kind;
  int pair = 0;
  int cyclic = 0;
  bool s3 = false;
  std::string union_orders;
  std::string field = "Q";
  std::string blocks;
  std::string g;
  int n = 0;
  std::string a, b;
  std::string out;
};

GroupoidPresentation groupoid_from(const MakeOptions& o) {
  int given = (o.pair > 0) + (o.cyclic > 0) + (o.s3 ? 1 : 0) + (!o.union_orders.empty());
  if (given != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --pair, --cyclic, --s3, --union");
  if (o.pair > 0) return pair_groupoid(o.pair);
  if (o.cyclic > 0) return cyclic_group(o.cyclic);
  if (o.s3) return symmetric_group3();
  const std::vector<int> orders = parse_ints(o.union_orders);
  GroupoidPresentation g = cyclic_group(orders[0]);
  for (std::size_t i = 1; i < orders.size(); ++i) g = disjoint_union(g, cyclic_group(orders[i]));
  return g;
}

template <class S>
WeakHopfAlgebra<S> make_over(const MakeOptions& o, const FieldSpec& field) {
  if (o.kind == "groupoid") return groupoid_algebra<S>(groupoid_from(o), field);
  if (o.kind == "functions") return function_algebra<S>(groupoid_from(o), field);
  if (o.kind == "group") {
    if (o.pair > 0 || !o.union_orders.empty()) throw Error(ErrorCode::InvalidArgument, "group takes --cyclic or --s3");
    return group_algebra<S>(groupoid_from(o), field);
  }
  if (o.kind == "matrix") {
    if (o.n < 1) throw Error(ErrorCode::InvalidArgument, "matrix needs --n");
    return matrix_wha<S>(o.n, field);
  }
  if (o.kind == "minimal") {
    if (o.blocks.empty() || o.g.empty()) throw Error(ErrorCode::InvalidArgument, "minimal needs --blocks and --g");
    return minimal_wha(diagonal_presentation<S>(parse_ints(o.blocks), parse_scalars<S>(o.g, field)));
  }
  if (o.kind == "sweedler") {
    if (!field.is_rational()) throw Error(ErrorCode::InvalidArgument, "sweedler is built over Q");
    if constexpr (std::is_same_v<S, Rational>) return sweedler_algebra<Rational>();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kind \"" + o.kind + "\"");
}

template <class S>
DynamicalTwistData<S> cyclic_dynamical_data(int order, const FieldSpec& field) {
  WeakHopfAlgebra<S> u = ensure_antipode(group_algebra<S>(cyclic_group(order), field));
  std::vector<Vec<S>> a;
  for (int i = 0; i < order; ++i) a.push_back(u.basis(i));
  return trivial_dynamical_data(u, a);
}

int cmd_make(const MakeOptions& o) {
  const FieldSpec field = parse_field(o.field);
  if (o.kind == "tensor") {
    const AnyWha a = parse_document(read_json(o.a));
    const AnyWha b = parse_document(read_json(o.b));
    json doc = std::visit(
        [](const auto& x, const auto& y) -> json {
          using SX = typename std::decay_t<decltype(x)>::Scalar;
          using SY = typename std::decay_t<decltype(y)>::Scalar;
          if constexpr (std::is_same_v<SX, SY>) {
            return to_json(ensure_antipode(tensor_product(x, y)));
          } else {
            throw Error(ErrorCode::FieldMismatch, x.field().to_string() + " vs " + y.field().to_string());
          }
        },
        a, b);
    write_json(doc, o.out);
    return kOk;
  }
  if (o.kind == "dyntwist-host") {
    if (o.cyclic < 1) throw Error(ErrorCode::InvalidArgument, "dyntwist-host needs --cyclic");
    const FieldSpec f = FieldSpec::cyclotomic(o.cyclic);
    json doc = f.is_rational() ? to_json(ensure_antipode(dynamical_host(cyclic_dynamical_data<Rational>(o.cyclic, f))))
                               : to_json(ensure_antipode(dynamical_host(cyclic_dynamical_data<Cyclotomic>(o.cyclic, f))));
    write_json(doc, o.out);
    return kOk;
  }
  json doc = field.is_rational() ? to_json(ensure_antipode(make_over<Rational>(o, field)))
                                 : to_json(ensure_antipode(make_over<Cyclotomic>(o, field)));
  // A document is emitted only if it validates.
  const AnyWha parsed = parse_document(doc);
  const bool ok = std::visit([](const auto& h) { return validate(h).ok(); }, parsed);
  if (!ok) throw Error(ErrorCode::Mismatch, "constructed algebra fails validation");
  write_json(doc, o.out);
  return kOk;
}

int cmd_validate(const std::string& input) {
  const AnyWha doc = parse_document(read_json(input));
  const ValidationReport rep = std::visit([](const auto& h) { return validate(h); }, doc);
  json out = report_to_json(rep);
  out["antipode_present"] = std::visit([](const auto& h) { return h.has_antipode(); }, doc);
  write_json(out, "-");
  return rep.ok() ? kOk : kFailed;
}

template <class S>
void require_valid(const WeakHopfAlgebra<S>& h) {
  const ValidationReport rep = validate(h);
  for (const auto& c : rep.checks)
    if (!c.passed) throw Error(ErrorCode::Mismatch, "input fails " + c.name + ": " + c.residual);
}

// The report runs even on documents that fail validation, so that section errors such as
// NotFrobenius are visible; the exit code is then 1.
int cmd_report(const std::string& input, ReportSections sections) {
  if (sections.none()) sections = ReportSections::all();
  const AnyWha doc = parse_document(read_json(input));
  bool complete = true;
  const json body = std::visit(
      [&](const auto& h0) {
        auto h = h0;
        json validation;
        if (!h.has_antipode()) {
          try {
            h = with_antipode(h0);
          } catch (const Error& e) {
            validation["antipode"] = error_json(e);
            complete = false;
          }
        }
        const ValidationReport rep = validate(h);
        validation["ok"] = rep.ok();
        if (!rep.ok()) {
          complete = false;
          validation["report"] = report_to_json(rep);
        }
        Report r = build_report(h, sections);
        complete = complete && r.complete;
        r.body["validation"] = validation;
        return r.body;
      },
      doc);
  write_json(body, "-");
  return complete ? kOk : kFailed;
}

struct TwistOptions {
  std::string input;
  std::string twist;
  std::string dynamical;
  std::string q;
  bool regularize = false;
  std::string out;
};

template <class S>
int twist_dynamical(const TwistOptions& o, const json& jdoc) {
  const DynamicalTwistData<S> d = dynamical_from_json<S>(jdoc);
  const DynamicalTwist<S> dt = dynamical_theta(d);
  if (!o.input.empty()) {
    const WeakHopfAlgebra<S> given = wha_from_json<S>(read_json(o.input));
    if (!(given == dt.host)) throw Error(ErrorCode::Mismatch, "input document is not the host M_|A| (x) U");
  }
  write_json(to_json(twist(dt.host, dt.twist)), o.out);
  return kOk;
}

int cmd_twist(const TwistOptions& o) {
  const int modes = !o.twist.empty() + !o.dynamical.empty() + !o.q.empty() + (o.regularize ? 1 : 0);
  if (modes != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --twist, --dynamical, --q, --regularize");
  if (!o.dynamical.empty()) {
    const json jdoc = read_json(o.dynamical);
    return parse_field(jdoc.value("field", std::string())).is_rational() ? twist_dynamical<Rational>(o, jdoc)
                                                                           : twist_dynamical<Cyclotomic>(o, jdoc);
  }
  if (o.input.empty()) throw Error(ErrorCode::InvalidArgument, "an input document is required");
  const AnyWha doc = parse_document(read_json(o.input));
  const json out = std::visit(
      [&](const auto& h0) -> json {
        using S = typename std::decay_t<decltype(h0)>::Scalar;
        const auto h = ensure_antipode(h0);
        require_valid(h);
        if (o.regularize) {
          const Regularized<S> r = regularize(h);
          json d = to_json(r.algebra);
          d["metadata"]["q"] = sparse_vector(r.q).dump();
          return d;
        }
        if (!o.q.empty()) {
          const json qdoc = inline_or_file(o.q);
          Vec<S> q = Vec<S>::Zero(h.dim());
          if (!qdoc.is_array()) throw Error(ErrorCode::ParseError, "--q: expected [[i, scalar], ...]");
          for (const auto& e : qdoc) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_string())
              throw Error(ErrorCode::ParseError, "--q: expected [[i, scalar], ...]");
            const int i = e[0].template get<int>();
            if (i < 0 || i >= h.dim()) throw Error(ErrorCode::ParseError, "--q: index out of range");
            q(i) += FieldOps<S>::parse(e[1].template get<std::string>(), h.field());
          }
          return to_json(deform_q(h, q));
        }
        return to_json(twist(h, twist_from_json<S>(inline_or_file(o.twist), h)));
      },
      doc);
  write_json(out, o.out);
  return kOk;
}

template <class S>
int dyntwist_over(const json& jdoc, const std::string& emit) {
  const DynamicalTwistData<S> d = dynamical_from_json<S>(jdoc);
  const DynamicalReport<S> r = dynamical_cosemisimplicity_check(d);
  if (!emit.empty()) {
    const DynamicalTwist<S> dt = dynamical_theta(d);
    write_json(to_json(twist(dt.host, dt.twist)), emit);
  }
  write_json(dynamical_report_json(r), "-");
  return r.ok() ? kOk : kFailed;
}

int cmd_dyntwist(const std::string& input, int cyclic, const std::string& emit) {
  if (cyclic > 0) {
    const FieldSpec f = FieldSpec::cyclotomic(cyclic);
    return f.is_rational() ? dyntwist_over<Rational>(dynamical_to_json(cyclic_dynamical_data<Rational>(cyclic, f)), emit)
                           : dyntwist_over<Cyclotomic>(dynamical_to_json(cyclic_dynamical_data<Cyclotomic>(cyclic, f)), emit);
  }
  if (input.empty()) throw Error(ErrorCode::InvalidArgument, "give a dynamical twist document or --cyclic");
  const json jdoc = read_json(input);
  return parse_field(jdoc.value("field", std::string())).is_rational() ? dyntwist_over<Rational>(jdoc, emit)
                                                                         : dyntwist_over<Cyclotomic>(jdoc, emit);
}

// integrals / radford / distinguished: one section each.
int cmd_section(const std::string& input, const std::string& which) {
  const AnyWha doc = parse_document(read_json(input));
  const json out = std::visit(
      [&](const auto& h0) -> json {
        const auto h = ensure_antipode(h0);
        require_valid(h);
        if (which == "integrals") return integrals_json(h);
        if (which == "radford") return radford_json(h);
        return distinguished_json(h);
      },
      doc);
  write_json(out, "-");
  if (which == "radford" && out["residual"] != "0") return kFailed;
  return kOk;
}

int cmd_grouplike(const std::string& input, const std::string& element, bool dual) {
  const AnyWha doc = parse_document(read_json(input));
  const json edoc = inline_or_file(element);
  const json out = std::visit(
      [&](const auto& h0) -> json {
        using S = typename std::decay_t<decltype(h0)>::Scalar;
        const auto h = ensure_antipode(h0);
        Vec<S> x = Vec<S>::Zero(h.dim());
        if (!edoc.is_array()) throw Error(ErrorCode::ParseError, "--element: expected [[i, scalar], ...]");
        for (const auto& e : edoc) {
          if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_string())
            throw Error(ErrorCode::ParseError, "--element: expected [[i, scalar], ...]");
          const int i = e[0].template get<int>();
          if (i < 0 || i >= h.dim()) throw Error(ErrorCode::ParseError, "--element: index out of range");
          x(i) += FieldOps<S>::parse(e[1].template get<std::string>(), h.field());
        }
        json r;
        if (dual) {
          r["dual_grouplike"] = is_dual_grouplike(h, x);
          r["half_grouplike"] = json{{"g1", in_g1_dual(h, x)}, {"g2", in_g2_dual(h, x)}};
          return r;
        }
        r["grouplike"] = is_grouplike(h, x);
        if (r["grouplike"]) {
          const InvertibleSearch<S> t = is_trivial_grouplike(h, x);
          r["trivial"] = decision_name(t.decision);
          r["witness"] = t.witness ? sparse_vector(*t.witness) : json(nullptr);
        }
        return r;
      },
      doc);
  write_json(out, "-");
  return kOk;
}

int cmd_zoo(bool run_all, const std::string& mutate, bool as_json, bool list, const std::string& emit) {
  if (list) {
    for (const ZooMember& m : zoo_members()) std::cout << m.name << "\n";
    return kOk;
  }
  if (!emit.empty()) {
    const ZooMember m = zoo_member(emit);
    write_json(std::visit([](const auto& h) { return to_json(h); }, m.algebra), "-");
    return kOk;
  }
  if (!run_all) throw Error(ErrorCode::InvalidArgument, "zoo needs --run-all, --list or --emit");
  SuiteOptions options;
  if (!mutate.empty()) options.mutate = mutate;
  const auto results = run_acceptance_suite(options);
  if (as_json)
    write_json(suite_to_json(results), "-");
  else
    std::cout << suite_summary(results);
  for (const auto& r : results)
    if (!r.passed()) return kFailed;
  return kOk;
}

int report_error(const Error& e) {
  std::cerr << error_json(e).dump() << "\n";
  return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument ? kBadInput : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional weak Hopf algebras"};
  app.require_subcommand(1);

  MakeOptions mk;
  auto* make = app.add_subcommand("make", "Build an algebra and emit its document");
  make->add_option("kind", mk.kind, "groupoid, functions, group, minimal, matrix, tensor, dyntwist-host, sweedler")->required();
  make->add_option("--pair", mk.pair, "pair groupoid on N objects");
  make->add_option("--cyclic", mk.cyclic, "cyclic group of order N");
  make->add_flag("--s3", mk.s3, "symmetric group S_3");
  make->add_option("--union", mk.union_orders, "disjoint union of cyclic groups, e.g. 2,2");
  make->add_option("--field", mk.field, "Q or Q(zeta_n)");
  make->add_option("--blocks", mk.blocks, "matrix block sizes of B, e.g. 2 or 1,1");
  make->add_option("--g", mk.g, "diagonal of g, one scalar per basis row, e.g. 3,-1");
  make->add_option("--n", mk.n, "size for matrix");
  make->add_option("--a", mk.a, "first factor document for tensor");
  make->add_option("--b", mk.b, "second factor document for tensor");
  make->add_option("--out", mk.out, "output path (default stdout)");

  std::string input;
  auto* validate_cmd = app.add_subcommand("validate", "Check every axiom; exit 1 on failure");
  validate_cmd->add_option("input", input, "document path or - for stdin");

  ReportSections sections;
  auto* report = app.add_subcommand("report", "Integrals, distinguished group-likes, S^4 and traces");
  report->add_option("input", input, "document path or - for stdin");
  report->add_flag("--integrals", sections.integrals, "integral dimensions, dual pair, Maschke, invariance");
  report->add_flag("--grouplikes", sections.grouplikes, "distinguished group-likes and antipode order");
  report->add_flag("--radford", sections.radford, "residual of the S^4 formula");
  report->add_flag("--traces", sections.traces, "Tr(S^2), block traces, connectedness, implications");
  report->add_flag("--dual", sections.dual, "repeat the chosen sections for the dual");

  TwistOptions tw;
  auto* twist_cmd = app.add_subcommand("twist", "Deform an algebra by a twist, by q, or by regularization");
  twist_cmd->add_option("input", tw.input, "document path or - for stdin");
  twist_cmd->add_option("--twist", tw.twist, "twist document (path or inline JSON)");
  twist_cmd->add_option("--dynamical", tw.dynamical, "dynamical twist document; the host is built from it");
  twist_cmd->add_option("--q", tw.q, "element q as [[i, scalar], ...] (path or inline JSON)");
  twist_cmd->add_flag("--regularize", tw.regularize, "deform by q = g^-1 from the minimal data");
  twist_cmd->add_option("--out", tw.out, "output path (default stdout)");

  int dyn_cyclic = 0;
  std::string dyn_emit;
  auto* dyn = app.add_subcommand("dyntwist", "Check a dynamical twist and the cosemisimplicity of H_Theta");
  dyn->add_option("input", input, "dynamical twist document");
  dyn->add_option("--cyclic", dyn_cyclic, "use U = k[Z/N], A = Z/N and J = 1 instead of a document");
  dyn->add_option("--emit", dyn_emit, "also write H_Theta to this path");

  auto* integrals_cmd = app.add_subcommand("integrals", "Integral spaces and a dual pair");
  integrals_cmd->add_option("input", input, "document path or - for stdin");
  auto* radford_cmd = app.add_subcommand("radford", "Residual of the S^4 formula; exit 1 unless zero");
  radford_cmd->add_option("input", input, "document path or - for stdin");
  auto* dist_cmd = app.add_subcommand("distinguished", "Distinguished group-likes alpha and a");
  dist_cmd->add_option("input", input, "document path or - for stdin");

  std::string element;
  bool dual_element = false;
  auto* grouplike = app.add_subcommand("grouplike", "Group-like predicates");
  auto* check = grouplike->add_subcommand("check", "Is the element group-like, and is it trivial?");
  grouplike->require_subcommand(1);
  check->add_option("input", input, "document path or - for stdin");
  check->add_option("--element", element, "[[i, scalar], ...] (path or inline JSON)")->required();
  check->add_flag("--dual", dual_element, "treat the element as a functional on H");

  bool run_all = false, as_json = false, list = false;
  std::string mutate, emit;
  auto* zoo = app.add_subcommand("zoo", "Bundled examples and the acceptance suite");
  zoo->add_flag("--run-all", run_all, "run the acceptance suite over every member");
  zoo->add_option("--inject-mutation", mutate, "corrupt this member's counit first (test mode)");
  zoo->add_flag("--json", as_json, "print the full report as JSON");
  zoo->add_flag("--list", list, "list member names");
  zoo->add_option("--emit", emit, "print a member's document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*make) return cmd_make(mk);
    if (*validate_cmd) return cmd_validate(input);
    if (*report) return cmd_report(input, sections);
    if (*twist_cmd) return cmd_twist(tw);
    if (*dyn) return cmd_dyntwist(input, dyn_cyclic, dyn_emit);
    if (*integrals_cmd) return cmd_section(input, "integrals");
    if (*radford_cmd) return cmd_section(input, "radford");
    if (*dist_cmd) return cmd_section(input, "distinguished");
    if (*check) return cmd_grouplike(input, element, dual_element);
    if (*zoo) return cmd_zoo(run_all, mutate, as_json, list, emit);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kFailed;
  }
  return kOk;
}
