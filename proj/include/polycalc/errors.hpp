#pragma once

#include <stdexcept>
#include <string>

namespace polycalc {

/// Machine-readable codes for expected domain failures. The CLI maps these
/// to stable strings on stderr and exit code 1.
enum class ErrorCode {
  EmptySet,
  PointNotInSet,
  PointNotInDomain,
  NotContainingOrigin,
  NotAnEpigraph,
  EmptyDomainIntersection,
  DimensionMismatch,
  OracleMismatch,
};

const char* errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail = "");

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Input text could not be parsed. Carries 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace polycalc
