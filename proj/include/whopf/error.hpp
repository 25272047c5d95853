#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace whopf {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  NoSolution,
  Singular,
  NoAntipode,
  NotUnique,
  Axiom26Failure,
  NotInvertible,
  NoAntipodeInverse,
  Degenerate,
  InvalidPresentation,
  TraceConditionViolated,
  NotSeparable,
  NotFrobenius,
  SearchExhausted,
  Inconsistent,
  Mismatch,
  RegularityViolated,
  NotHalfGrouplike,
  NonSplit,
  PreconditionUnmet,
  NotATwist,
  VNotInvertible,
  DynamicalEquationViolated,
  FieldTooSmall,
  Undecidable,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and machine readable;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace whopf
