#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobtorus {

enum class ErrorCode {
  NonPrime,
  SizeExceeded,
  DivisionByZero,
  BadDegrees,
  Singular,
  WeilBoundViolated,
  NonIntegralCoefficient,
  InvariantViolation,
  ZeroPolynomial,
  ParseError,
  ResumeMismatch,
  CorruptRecord,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto process exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class CorruptRecordError : public Error {
 public:
  CorruptRecordError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace frobtorus
