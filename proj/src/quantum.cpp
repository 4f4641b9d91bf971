#include "entrobell/quantum.hpp"

#include <cmath>
#include <numbers>

namespace entrobell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wraps into (-pi, pi]. IEEE remainder already lands in [-pi, pi] and leaves
// in-range values bitwise untouched; only the -pi edge needs moving.
double wrap_angle(double angle) {
  double r = std::remainder(angle, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

}  // namespace

MeasurementSetup::MeasurementSetup(double theta_in, double phi_in)
    : theta(wrap_angle(theta_in)), phi(wrap_angle(phi_in)) {}

JointDistribution singlet_pair_distribution(double axis1, double axis2) {
  const double c = std::cos(axis1 - axis2);
  const double same = (1.0 - c) / 4.0;  // outcomes equal
  const double diff = (1.0 + c) / 4.0;  // outcomes opposite
  return make_joint({"S1", "S2"}, {same, diff, diff, same});
}

CorrelationSet bell_correlations(const MeasurementSetup& setup) {
  const double ab = std::cos(setup.theta);
  return CorrelationSet{
      ab,
      -std::cos(setup.phi),
      -std::cos(setup.theta - setup.phi),
      -ab,
      -1.0,
  };
}

PairwiseEntropySummary bell_entropy_summary(const MeasurementSetup& setup) {
  return PairwiseEntropySummary{
      1.0,
      1.0,
      1.0,
      mutual_from_correlation(std::cos(setup.theta)),
      mutual_from_correlation(std::cos(setup.phi)),
      mutual_from_correlation(std::cos(setup.theta - setup.phi)),
  };
}

}  // namespace entrobell
