#pragma once

#include <stdexcept>
#include <string>

namespace solvlie {

enum class ErrorCode {
  DimensionMismatch,
  ZeroDenominator,
  ParseError,
  BadDimension,
  InvalidParameter,
  NotADerivation,
  NotAnIdeal,
  BracketNotPreserved,
  NotNilIndependent,
  NilpotentInput,
  CommutatorNotInner,
  ExcludedParameter,
  IrrationalNormalization,
  IndexOutOfRange,
  DivergentExponent,
  NotEigenvector,
  DegeneratePoint,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace solvlie
