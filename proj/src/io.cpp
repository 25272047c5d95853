#include "whopf/io.hpp"

#include <algorithm>
#include <tuple>

#include "whopf/error.hpp"

namespace whopf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const json& member(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

int index_at(const json& v, int bound, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "index must be an integer");
  const long long i = v.get<long long>();
  if (i < 0 || i >= bound) fail(where, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<int>(i);
}

template <class S>
S scalar_at(const json& v, const FieldSpec& field, const std::string& where) {
  if (!v.is_string()) fail(where, "scalar must be a string");
  try {
    return FieldOps<S>::parse(v.get<std::string>(), field);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

// Sparse list of fixed-arity index tuples followed by a scalar.
template <class S, std::size_t N, class F>
void read_entries(const json& list, int bound, const FieldSpec& field, const std::string& where, F&& sink) {
  if (!list.is_array()) fail(where, "expected an array");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string at = where + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != N + 1) fail(at, "expected " + std::to_string(N + 1) + " items");
    std::array<int, N> idx{};
    for (std::size_t k = 0; k < N; ++k) idx[k] = index_at(entry[k], bound, at);
    sink(idx, scalar_at<S>(entry[N], field, at));
  }
}

template <class S>
Vec<S> read_vector(const json& list, int n, const FieldSpec& field, const std::string& where) {
  Vec<S> v = Vec<S>::Zero(n);
  read_entries<S, 1>(list, n, field, where, [&](const std::array<int, 1>& i, const S& s) { v(i[0]) += s; });
  return v;
}

template <class S>
Mat<S> read_matrix(const json& list, int n, const FieldSpec& field, const std::string& where) {
  Mat<S> m = Mat<S>::Zero(n, n);
  read_entries<S, 2>(list, n, field, where, [&](const std::array<int, 2>& i, const S& s) { m(i[0], i[1]) += s; });
  return m;
}

template <class S>
json sparse_matrix(const Mat<S>& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out.push_back(json::array({i, j, FieldOps<S>::format(m(i, j))}));
  return out;
}

void check_version(const json& doc, const std::string& where) {
  const json& v = member(doc, "schema_version", where);
  if (!v.is_string() || v.get<std::string>() != kSchemaVersion) fail(where + ".schema_version", "unsupported version");
}

FieldSpec field_of(const json& doc, const std::string& where) {
  const json& f = member(doc, "field", where);
  if (!f.is_string()) fail(where + ".field", "expected a string");
  return parse_field(f.get<std::string>());
}

template <class S>
void require_scalar_type(const FieldSpec& field, const std::string& where) {
  if (std::is_same_v<S, Rational> && !field.is_rational()) fail(where, "expected a rational document, got " + field.to_string());
}

}  // namespace

FieldSpec parse_field(const std::string& text) {
  if (text == "Q") return FieldSpec::rational();
  const std::string prefix = "Q(zeta_";
  if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')') {
    const std::string digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (!digits.empty() && digits.size() < 6 && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return FieldSpec::cyclotomic(std::stoi(digits));
  }
  throw Error(ErrorCode::ParseError, "field: expected \"Q\" or \"Q(zeta_n)\", got \"" + text + "\"");
}

template <class S>
json sparse_vector(const Vec<S>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.push_back(json::array({i, FieldOps<S>::format(v(i))}));
  return out;
}

template <class S>
json to_json(const WeakHopfAlgebra<S>& h) {
  const int n = h.dim();
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["field"] = h.field().to_string();
  doc["dim"] = n;
  doc["basis"] = h.labels();
  json mult = json::array(), comult = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto terms = h.product_terms(i, j);
      std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [k, v] : terms)
        if (!is_zero(v)) mult.push_back(json::array({i, j, k, FieldOps<S>::format(v)}));
    }
  for (int i = 0; i < n; ++i)
    for (const auto& t : tensor_terms(h.comul(h.basis(i)))) comult.push_back(json::array({i, t.a, t.b, FieldOps<S>::format(t.v)}));
  doc["mult"] = mult;
  doc["comult"] = comult;
  doc["unit"] = sparse_vector(h.unit());
  doc["counit"] = sparse_vector(h.counit());
  if (h.has_antipode()) doc["antipode"] = sparse_matrix<S>(Mat<S>(h.antipode().transpose()));
  json meta = json::object();
  for (const auto& [k, v] : h.metadata()) meta[k] = v;
  doc["metadata"] = meta;
  return doc;
}

template <class S>
WeakHopfAlgebra<S> wha_from_json(const json& doc) {
  const std::string where = "document";
  check_version(doc, where);
  const FieldSpec field = field_of(doc, where);
  require_scalar_type<S>(field, where + ".field");
  const json& dim = member(doc, "dim", where);
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 4096) fail(where + ".dim", "expected a positive integer");
  const int n = dim.get<int>();
  std::vector<std::string> labels;
  if (const auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array() || it->size() != static_cast<std::size_t>(n)) fail(where + ".basis", "expected " + std::to_string(n) + " labels");
    for (const auto& l : *it) {
      if (!l.is_string()) fail(where + ".basis", "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  WeakHopfAlgebra<S> h(field, labels);
  read_entries<S, 3>(member(doc, "mult", where), n, field, where + ".mult",
                     [&](const std::array<int, 3>& i, const S& s) { h.add_mult(i[0], i[1], i[2], s); });
  read_entries<S, 3>(member(doc, "comult", where), n, field, where + ".comult",
                     [&](const std::array<int, 3>& i, const S& s) { h.add_comult(i[0], i[1], i[2], s); });
  h.set_unit(read_vector<S>(member(doc, "unit", where), n, field, where + ".unit"));
  h.set_counit(read_vector<S>(member(doc, "counit", where), n, field, where + ".counit"));
  if (const auto it = doc.find("antipode"); it != doc.end() && !it->is_null())
    h.set_antipode(Mat<S>(read_matrix<S>(*it, n, field, where + ".antipode").transpose()));
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) fail(where + ".metadata", "expected an object");
    for (const auto& item : it->items())
      h.metadata()[item.key()] = item.value().is_string() ? item.value().template get<std::string>() : item.value().dump();
  }
  return h;
}

AnyWha parse_document(const json& doc) {
  const FieldSpec field = field_of(doc, "document");
  if (field.is_rational()) return wha_from_json<Rational>(doc);
  return wha_from_json<Cyclotomic>(doc);
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

template <class S>
json twist_to_json(const WeakHopfAlgebra<S>& h, const Twist<S>& t) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["field"] = h.field().to_string();
  doc["theta"] = sparse_matrix(t.theta);
  doc["theta_bar"] = sparse_matrix(t.theta_bar);
  return doc;
}

template <class S>
Twist<S> twist_from_json(const json& doc, const WeakHopfAlgebra<S>& h) {
  const std::string where = "twist";
  check_version(doc, where);
  if (!(field_of(doc, where) == h.field())) fail(where + ".field", "differs from the algebra's field");
  return {read_matrix<S>(member(doc, "theta", where), h.dim(), h.field(), where + ".theta"),
          read_matrix<S>(member(doc, "theta_bar", where), h.dim(), h.field(), where + ".theta_bar")};
}

template <class S>
json dynamical_to_json(const DynamicalTwistData<S>& d) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["field"] = d.u.field().to_string();
  doc["u"] = to_json(d.u);
  json group = json::array();
  for (const auto& a : d.group) group.push_back(sparse_vector(a));
  doc["group"] = group;
  json js = json::array();
  for (const auto& j : d.j) {
    json rows = json::array();
    for (Eigen::Index a = 0; a < j.rows(); ++a) {
      json row = json::array();
      for (Eigen::Index b = 0; b < j.cols(); ++b) row.push_back(FieldOps<S>::format(j(a, b)));
      rows.push_back(row);
    }
    js.push_back(rows);
  }
  doc["j"] = js;
  return doc;
}

template <class S>
DynamicalTwistData<S> dynamical_from_json(const json& doc) {
  const std::string where = "dynamical";
  check_version(doc, where);
  const FieldSpec field = field_of(doc, where);
  require_scalar_type<S>(field, where + ".field");
  WeakHopfAlgebra<S> u = wha_from_json<S>(member(doc, "u", where));
  if (!(u.field() == field)) fail(where + ".u.field", "differs from the outer field");
  if (!u.has_antipode()) u = with_antipode(u);
  const int n = u.dim();
  const json& group = member(doc, "group", where);
  if (!group.is_array() || group.empty()) fail(where + ".group", "expected a non-empty array");
  std::vector<Vec<S>> a;
  for (std::size_t i = 0; i < group.size(); ++i)
    a.push_back(read_vector<S>(group[i], n, field, where + ".group[" + std::to_string(i) + "]"));
  const auto it = doc.find("j");
  if (it == doc.end() || it->is_null()) return trivial_dynamical_data(u, a);
  if (!it->is_array()) fail(where + ".j", "expected an array");
  DynamicalTwistData<S> d{u, a, {}};
  for (std::size_t l = 0; l < it->size(); ++l) {
    const std::string at = where + ".j[" + std::to_string(l) + "]";
    const json& rows = (*it)[l];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) fail(at, "expected " + std::to_string(n) + " rows");
    Mat<S> j(n, n);
    for (int r = 0; r < n; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) fail(at, "expected " + std::to_string(n) + " columns");
      for (int c = 0; c < n; ++c)
        j(r, c) = scalar_at<S>(row[static_cast<std::size_t>(c)], field, at + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    d.j.push_back(j);
  }
  return d;
}

json report_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    if (!c.passed) {
      entry["witness"] = c.witness;
      entry["residual"] = c.residual;
    }
    checks.push_back(entry);
  }
  json out;
  out["ok"] = r.ok();
  out["checks"] = checks;
  return out;
}

namespace {

bool is_flat(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

void emit(const json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& item : v.items()) {
      out += pad + json(item.key()).dump() + ": ";
      emit(item.value(), depth + 1, out);
      out += ++i < v.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (v.is_array() && !v.empty() && !is_flat(v)) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += pad;
      emit(v[i], depth + 1, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (v.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
    out += "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string emit_json(const json& doc) {
  std::string out;
  emit(doc, 0, out);
  return out + "\n";
}

#define WHOPF_INSTANTIATE_IO(S)                                              \
  template json sparse_vector<S>(const Vec<S>&);                             \
  template json to_json<S>(const WeakHopfAlgebra<S>&);                       \
  template WeakHopfAlgebra<S> wha_from_json<S>(const json&);                 \
  template json twist_to_json<S>(const WeakHopfAlgebra<S>&, const Twist<S>&); \
  template Twist<S> twist_from_json<S>(const json&, const WeakHopfAlgebra<S>&); \
  template json dynamical_to_json<S>(const DynamicalTwistData<S>&);          \
  template DynamicalTwistData<S> dynamical_from_json<S>(const json&);

WHOPF_INSTANTIATE_IO(Rational)
WHOPF_INSTANTIATE_IO(Cyclotomic)

}  // namespace whopf
