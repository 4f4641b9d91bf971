#pragma once

namespace entrobell {

// A report is flagged violated only when the margin is decisively negative;
// boundary cases (margin == 0) always count as satisfied.
inline constexpr double kViolationTolerance = 1e-9;

enum class InequalityId {
  bell1,
  bell2,
  bell3,
  bell_std,
  ebell1,
  ebell2,
  ebell3,
  ebell_std,
  echsh,
  wigner,
};

// Stable uppercase name, e.g. "EBELL3".
const char* to_string(InequalityId id) noexcept;

// One inequality evaluation. margin = rhs - lhs, so positive margins mean
// slack and violated <=> margin < -kViolationTolerance.
struct InequalityReport {
  InequalityId id;
  double lhs;
  double rhs;
  double margin;
  bool violated;
};

// Builds a report from lhs/rhs, deriving margin and the violated flag.
InequalityReport make_report(InequalityId id, double lhs, double rhs) noexcept;

}  // namespace entrobell
