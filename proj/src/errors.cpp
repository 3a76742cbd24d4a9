#include "polycalc/errors.hpp"

namespace polycalc {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::PointNotInSet: return "PointNotInSet";
    case ErrorCode::PointNotInDomain: return "PointNotInDomain";
    case ErrorCode::NotContainingOrigin: return "NotContainingOrigin";
    case ErrorCode::NotAnEpigraph: return "NotAnEpigraph";
    case ErrorCode::EmptyDomainIntersection: return "EmptyDomainIntersection";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty() ? errorCodeName(code)
                                        : std::string(errorCodeName(code)) + ": " + detail),
      code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

}  // namespace polycalc
