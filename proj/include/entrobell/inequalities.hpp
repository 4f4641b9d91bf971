#pragma once

#include <array>
#include <string>
#include <vector>

#include "entrobell/entropy.hpp"
#include "entrobell/quantum.hpp"
#include "entrobell/report.hpp"

namespace entrobell {

// Which conditional entropies are forced negative by the pairwise data, and
// how negative at least. An entry appears exactly when the matching
// delta-independent cell sum is decisively negative; the bound equals that
// sum, since the paired conditional mutual information is non-negative for
// any state (strong subadditivity), so the conditional entropy cannot
// exceed it.
struct NegativityEntry {
  std::string label;  // "H(A|BC)", "H(B|AC)" or "H(C|AB)"
  double bound;       // upper bound in bits (negative)
};

struct NegativityDiagnosis {
  std::vector<NegativityEntry> entries;
};

// The three basic correlation inequalities, each bounded by 1:
//   BELL1: ab + ac - bc    BELL2: ab - ac + bc    BELL3: -ab + ac + bc
std::array<InequalityReport, 3> conventional_bell(const CorrelationSet& corr);

// The standard form |ab - ac| + bc <= 1.
InequalityReport standard_bell(const CorrelationSet& corr);

// The entropic counterparts with the same sign structure on the pairwise
// mutual informations, bounded by the matching marginal entropy:
//   EBELL1: iAB + iAC - iBC <= hA
//   EBELL2: iAB - iAC + iBC <= hB
//   EBELL3: -iAB + iAC + iBC <= hC
std::array<InequalityReport, 3> entropic_bell(
    const PairwiseEntropySummary& summary);

// The standard entropic form |iAB - iAC| + iBC <= 1. The bound 1 assumes
// uniform marginals (every hX = 1 bit), which holds for all Bell setups.
InequalityReport entropic_bell_standard(const PairwiseEntropySummary& summary);

// The four-observable entropic inequality
//   iA'B + iAC - iBC + iAA' <= 2.
// Takes the four mutual informations directly; each must lie in [0,1].
// Errors: OUT_OF_RANGE.
InequalityReport entropic_chsh(double i_a_prime_b, double i_ac, double i_bc,
                               double i_a_a_prime);

// For each decisively negative degree sum, reports the conditional entropy
// it forces negative: EBELL1 <-> H(A|BC), EBELL2 <-> H(B|AC),
// EBELL3 <-> H(C|AB). Empty when no entropic inequality is violated.
NegativityDiagnosis diagnose_negativity(const PairwiseEntropySummary& summary);

}  // namespace entrobell
