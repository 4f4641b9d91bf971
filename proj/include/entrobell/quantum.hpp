#pragma once

#include "entrobell/entropy.hpp"
#include "entrobell/probability.hpp"

namespace entrobell {

// Axis angles (radians, measured from the z-axis in the x-z plane) for the
// two tilted spin measurements: theta for observable B on the first particle
// and phi for observable C on the second. Construction wraps both angles
// into (-pi, pi]; values already in range pass through unchanged.
struct MeasurementSetup {
  MeasurementSetup(double theta_in, double phi_in);

  double theta;
  double phi;
};

// The five correlation coefficients of the three-observable setup (A and A'
// are the z-measurements on the two particles). When derived from a
// MeasurementSetup, a_prime_b == -ab and a_a_prime == -1 exactly: A' is
// fully anticorrelated with A.
struct CorrelationSet {
  double ab;
  double ac;
  double bc;
  double a_prime_b;
  double a_a_prime;
};

// Outcome table for spin measurements on the two halves of a singlet pair
// along axes at the given polar angles: p(s1,s2) = (1 - s1*s2*cos(d))/4 with
// d = axis1 - axis2. Marginals are uniform and the correlation is -cos(d).
// Variables are named S1 and S2.
JointDistribution singlet_pair_distribution(double axis1, double axis2);

// Standard singlet correlations for the Bell setup: ab = cos(theta),
// ac = -cos(phi), bc = -cos(theta - phi), a_prime_b = -cos(theta),
// a_a_prime = -1.
CorrelationSet bell_correlations(const MeasurementSetup& setup);

// Pair-accessible entropies of the Bell setup. Outcomes are ±1 with equal
// probability, so every marginal entropy is exactly 1 bit and each mutual
// information is mutual_from_correlation of the pair correlation (which
// depends only on |c|, making the sign conventions above irrelevant here).
PairwiseEntropySummary bell_entropy_summary(const MeasurementSetup& setup);

}  // namespace entrobell
