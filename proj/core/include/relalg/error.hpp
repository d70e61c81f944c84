#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relalg {

// Machine-readable error categories. The CLI prints them as `ERROR:<CODE>:`.
enum class ErrorCode {
  kType,               // mixed carrier operands
  kUndefinedClosure,   // scalar star not defined for the value
  kClosureDivergence,  // matrix closure hit an undefined pivot star
  kStructure,          // dimension or node-index mismatch
  kNotADag,
  kNotNilpotent,
  kInvariantViolation,
  kUnknownNode,
  kUnknownConnector,
  kUnknownBlock,
  kLengthMismatch,
  kSpecValidation,
  kConfig,
  kParse,
  kIo,
  kOverflow,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relalg
