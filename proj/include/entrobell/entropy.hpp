#pragma once

#include <array>
#include <string>
#include <vector>

#include "entrobell/probability.hpp"

namespace entrobell {

// The seven cells of the three-variable entropy Venn diagram, in bits.
// alpha, beta, gamma are the conditional entropies H(A|BC), H(B|AC), H(C|AB);
// abar, bbar, gbar the conditional mutual informations H(B:C|A), H(A:C|B),
// H(A:B|C); delta the ternary mutual information H(A:B:C). For classical
// inputs every cell except delta is non-negative; delta can go negative even
// classically (the XOR triple reaches -1).
struct EntropyDiagram {
  double alpha;
  double beta;
  double gamma;
  double abar;
  double bbar;
  double gbar;
  double delta;
};

// The six pair-measurable entropies of a three-variable system, in bits:
// the marginal entropies and the three pairwise mutual informations.
// Variable roles A, B, C follow the variable order of the source
// distribution.
struct PairwiseEntropySummary {
  double hA;
  double hB;
  double hC;
  double iAB;
  double iAC;
  double iBC;
};

// Shannon entropy -sum p*log2(p) with the 0*log(0) = 0 convention.
double shannon_entropy(const JointDistribution& joint);

// H(X:Y) = H(X) + H(Y) - H(XY) over the named variables.
// Errors: UNKNOWN_LABEL, SAME_LABEL.
double mutual_information(const JointDistribution& joint,
                          const std::string& x, const std::string& y);

// H(X|given) = H(X, given) - H(given); an empty given yields H(X).
// Errors: UNKNOWN_LABEL, OVERLAP (x listed in given), SAME_LABEL
// (duplicate inside given).
double conditional_entropy(const JointDistribution& joint,
                           const std::string& x,
                           const std::vector<std::string>& given);

// H(X:Y|Z) = H(XZ) + H(YZ) - H(Z) - H(XYZ) over three distinct variables.
// Errors: UNKNOWN_LABEL, SAME_LABEL.
double conditional_mutual(const JointDistribution& joint,
                          const std::string& x, const std::string& y,
                          const std::string& z);

// H(A:B:C) = H(A)+H(B)+H(C) - H(AB)-H(AC)-H(BC) + H(ABC); may be negative.
// Errors: BAD_ARITY (arity != 3).
double ternary_mutual(const JointDistribution& joint);

// All seven Venn cells of a three-variable distribution. Errors: BAD_ARITY.
EntropyDiagram ternary_diagram(const JointDistribution& joint);

// The six pair-accessible entropies, computed from singleton and pair
// marginals only. Errors: BAD_ARITY.
PairwiseEntropySummary pairwise_summary(const JointDistribution& joint);

// Reconstructs a full diagram from pair-accessible entropies plus an assumed
// ternary mutual information delta: gbar = iAB - delta, bbar = iAC - delta,
// abar = iBC - delta, alpha = hA - bbar - gbar - delta (and cyclically).
// No classicality is assumed, so entries may come out negative; delta is not
// validated for feasibility (the pairwise data does not constrain it).
EntropyDiagram diagram_from_summary(const PairwiseEntropySummary& summary,
                                    double delta);

// The delta-independent cell sums (alpha+abar, beta+bbar, gamma+gbar) =
// (hA + iBC - iAB - iAC, hB + iAC - iAB - iBC, hC + iAB - iAC - iBC).
std::array<double, 3> degree_sums(const PairwiseEntropySummary& summary);

// Mutual information of two ±1 variables with uniform marginals and
// correlation c: 1 - h2((1+c)/2) = ½log2(1-c²) + (c/2)log2((1+c)/(1-c)).
// Even in c exactly; returns exactly 1 when |c| is within 1e-15 of 1.
// Errors: OUT_OF_RANGE (|c| > 1).
double mutual_from_correlation(double c);

}  // namespace entrobell
