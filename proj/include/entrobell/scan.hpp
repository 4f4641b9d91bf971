#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entrobell/inequalities.hpp"

namespace entrobell {

// One sweep grid point: the left-hand sides of the three entropic (lE*) and
// three conventional (lC*) inequalities at a fixed theta and this phi.
struct SweepRow {
  double phi;
  double lE1;
  double lE2;
  double lE3;
  double lC1;
  double lC2;
  double lC3;
};

enum class Family { entropic, conventional };

// "entropic" / "conventional".
const char* to_string(Family family) noexcept;

// The located maximal violation of one inequality family. lhs_star is the
// left-hand side of inequality_id re-evaluated exactly at
// (theta_star, phi_star).
struct OptimumReport {
  Family family;
  double theta_star;
  double phi_star;
  double lhs_star;
  InequalityId inequality_id;
};

// Evaluates both inequality families on `steps` uniformly spaced phi values
// from phi_min to phi_max inclusive, at fixed theta. Rows come back in
// ascending phi. Errors: BAD_RANGE (steps < 2, phi_min >= phi_max, or
// non-finite inputs).
std::vector<SweepRow> sweep_phi(double theta, double phi_min, double phi_max,
                                int steps);

// Maximizes the family's largest (lhs - rhs) margin over theta in (0, pi),
// phi in (-pi, pi]. A two-pass scan of a resolution x 2*resolution grid
// seeds alternating golden-section refinement of every near-maximal basin;
// the global maximum is degenerate (the objective has exact symmetries), so
// among refined candidates tied within 1e-9 the one with the smallest
// (max axis separation, |phi|, separation of theta-phi, theta, phi) is
// returned, making the result deterministic and stable under grid
// refinement. Ties between the three inequalities at the optimum break
// toward the lowest index. Errors: BAD_RANGE (resolution < 2).
OptimumReport maximize_violation(Family family, int resolution = 720);

// Writes rows as CSV: header "phi,LE1,LE2,LE3,LC1,LC2,LC3", one line per
// row, 9 significant digits, '\n' line ends, no trailing whitespace.
// Byte-stable for identical inputs. Errors: BAD_RANGE (no rows), IO_ERROR.
void emit_rows(const std::vector<SweepRow>& rows, std::ostream& out);
void emit_rows(const std::vector<SweepRow>& rows, const std::string& path);

}  // namespace entrobell
