#include "entrobell/error.hpp"

#include "entrobell/report.hpp"
#include "entrobell/scan.hpp"

namespace entrobell {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::negative_probability: return "NEGATIVE_PROBABILITY";
    case ErrorCode::not_normalized: return "NOT_NORMALIZED";
    case ErrorCode::bad_arity: return "BAD_ARITY";
    case ErrorCode::unknown_label: return "UNKNOWN_LABEL";
    case ErrorCode::same_label: return "SAME_LABEL";
    case ErrorCode::overlap: return "OVERLAP";
    case ErrorCode::out_of_range: return "OUT_OF_RANGE";
    case ErrorCode::bad_range: return "BAD_RANGE";
    case ErrorCode::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

const char* to_string(InequalityId id) noexcept {
  switch (id) {
    case InequalityId::bell1: return "BELL1";
    case InequalityId::bell2: return "BELL2";
    case InequalityId::bell3: return "BELL3";
    case InequalityId::bell_std: return "BELL_STD";
    case InequalityId::ebell1: return "EBELL1";
    case InequalityId::ebell2: return "EBELL2";
    case InequalityId::ebell3: return "EBELL3";
    case InequalityId::ebell_std: return "EBELL_STD";
    case InequalityId::echsh: return "ECHSH";
    case InequalityId::wigner: return "WIGNER";
  }
  return "UNKNOWN";
}

InequalityReport make_report(InequalityId id, double lhs, double rhs) noexcept {
  const double margin = rhs - lhs;
  return InequalityReport{id, lhs, rhs, margin, margin < -kViolationTolerance};
}

const char* to_string(Family family) noexcept {
  return family == Family::entropic ? "entropic" : "conventional";
}

}  // namespace entrobell
