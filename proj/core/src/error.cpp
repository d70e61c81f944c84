#include "relalg/error.hpp"

namespace relalg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kType: return "TYPE";
    case ErrorCode::kUndefinedClosure: return "UNDEFINED_CLOSURE";
    case ErrorCode::kClosureDivergence: return "CLOSURE_DIVERGENCE";
    case ErrorCode::kStructure: return "STRUCTURE";
    case ErrorCode::kNotADag: return "NOT_A_DAG";
    case ErrorCode::kNotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::kInvariantViolation: return "INVARIANT_VIOLATION";
    case ErrorCode::kUnknownNode: return "UNKNOWN_NODE";
    case ErrorCode::kUnknownConnector: return "UNKNOWN_CONNECTOR";
    case ErrorCode::kUnknownBlock: return "UNKNOWN_BLOCK";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kSpecValidation: return "SPEC_VALIDATION";
    case ErrorCode::kConfig: return "CONFIG";
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kIo: return "IO";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace relalg
