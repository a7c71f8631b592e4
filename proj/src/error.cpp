#include "frobtorus/error.hpp"

namespace frobtorus {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadDegrees: return "BadDegrees";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::WeilBoundViolated: return "WeilBoundViolated";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ResumeMismatch: return "ResumeMismatch";
    case ErrorCode::CorruptRecord: return "CorruptRecord";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

CorruptRecordError::CorruptRecordError(std::size_t line, const std::string& message)
    : Error(ErrorCode::CorruptRecord, "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace frobtorus
