#include "entrobell/inequalities.hpp"

#include <cmath>

namespace entrobell {

std::array<InequalityReport, 3> conventional_bell(const CorrelationSet& corr) {
  return {
      make_report(InequalityId::bell1, (corr.ab + corr.ac) - corr.bc, 1.0),
      make_report(InequalityId::bell2, (corr.ab - corr.ac) + corr.bc, 1.0),
      make_report(InequalityId::bell3, (-corr.ab + corr.ac) + corr.bc, 1.0),
  };
}

InequalityReport standard_bell(const CorrelationSet& corr) {
  return make_report(InequalityId::bell_std,
                     std::abs(corr.ab - corr.ac) + corr.bc, 1.0);
}

std::array<InequalityReport, 3> entropic_bell(
    const PairwiseEntropySummary& s) {
  return {
      make_report(InequalityId::ebell1, (s.iAB + s.iAC) - s.iBC, s.hA),
      make_report(InequalityId::ebell2, (s.iAB - s.iAC) + s.iBC, s.hB),
      make_report(InequalityId::ebell3, (-s.iAB + s.iAC) + s.iBC, s.hC),
  };
}

InequalityReport entropic_bell_standard(const PairwiseEntropySummary& s) {
  return make_report(InequalityId::ebell_std,
                     std::abs(s.iAB - s.iAC) + s.iBC, 1.0);
}

InequalityReport entropic_chsh(double i_a_prime_b, double i_ac, double i_bc,
                               double i_a_a_prime) {
  for (double v : {i_a_prime_b, i_ac, i_bc, i_a_a_prime}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::out_of_range,
                  "mutual informations of binary variables must lie in "
                  "[0,1], got " +
                      std::to_string(v));
    }
  }
  const double lhs = ((i_a_prime_b + i_ac) - i_bc) + i_a_a_prime;
  return make_report(InequalityId::echsh, lhs, 2.0);
}

NegativityDiagnosis diagnose_negativity(const PairwiseEntropySummary& s) {
  static const char* kLabels[3] = {"H(A|BC)", "H(B|AC)", "H(C|AB)"};
  const std::array<double, 3> sums = degree_sums(s);
  NegativityDiagnosis diagnosis;
  for (int k = 0; k < 3; ++k) {
    if (sums[k] < -kViolationTolerance) {
      diagnosis.entries.push_back(NegativityEntry{kLabels[k], sums[k]});
    }
  }
  return diagnosis;
}

}  // namespace entrobell
