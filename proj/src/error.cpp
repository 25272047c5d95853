#include "whopf/error.hpp"

namespace whopf {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NoAntipode: return "NoAntipode";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::Axiom26Failure: return "Axiom26Failure";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NoAntipodeInverse: return "NoAntipodeInverse";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::TraceConditionViolated: return "TraceConditionViolated";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::NotFrobenius: return "NotFrobenius";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::RegularityViolated: return "RegularityViolated";
    case ErrorCode::NotHalfGrouplike: return "NotHalfGrouplike";
    case ErrorCode::NonSplit: return "NonSplit";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::NotATwist: return "NotATwist";
    case ErrorCode::VNotInvertible: return "VNotInvertible";
    case ErrorCode::DynamicalEquationViolated: return "DynamicalEquationViolated";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::Undecidable: return "Undecidable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace whopf
