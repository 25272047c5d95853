#pragma once

// JSON interchange: structure-constant documents, twists and dynamical twist data.
// Scalars are strings in the scalar grammar of the document's field; tensors are sparse
// index lists sorted by index, so emitting a parsed canonical document reproduces it.

#include <string>
#include <variant>

#include <json.hpp>

#include "whopf/twisting.hpp"

namespace whopf {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// "Q" or "Q(zeta_n)".
FieldSpec parse_field(const std::string& text);

/// Either scalar type, chosen by the document's field.
using AnyWha = std::variant<WeakHopfAlgebra<Rational>, WeakHopfAlgebra<Cyclotomic>>;

/// {schema_version, field, dim, basis, mult: [[i,j,k,s]], comult: [[i,j,k,s]], unit: [[i,s]],
///  counit: [[i,s]], antipode: [[i,j,s]] (S(e_i) has coefficient s at e_j), metadata}.
template <class S>
json to_json(const WeakHopfAlgebra<S>& h);

/// Parses a document over a known scalar type; throws ParseError with the offending path.
template <class S>
WeakHopfAlgebra<S> wha_from_json(const json& doc);

AnyWha parse_document(const json& doc);

/// Reads JSON text; throws ParseError on malformed input.
json parse_json_text(const std::string& text);

/// {schema_version, field, theta: [[a,b,s]], theta_bar: [[a,b,s]]}.
template <class S>
json twist_to_json(const WeakHopfAlgebra<S>& h, const Twist<S>& t);

template <class S>
Twist<S> twist_from_json(const json& doc, const WeakHopfAlgebra<S>& h);

/// {schema_version, field, u: document, group: [[[i,s],...], ...],
///  j: [dense dim(U) x dim(U) arrays of scalars, one per character]}. A missing "j" means
/// J = 1 (x) 1 for every character.
template <class S>
json dynamical_to_json(const DynamicalTwistData<S>& d);

template <class S>
DynamicalTwistData<S> dynamical_from_json(const json& doc);

json report_to_json(const ValidationReport& r);

/// Two-space indented text with arrays of scalars kept on one line; ends with a newline.
std::string emit_json(const json& doc);

/// Sparse [[i, s], ...] for a vector.
template <class S>
json sparse_vector(const Vec<S>& v);

}  // namespace whopf
