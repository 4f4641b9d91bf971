#include "entrobell/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace entrobell {

namespace {

void require_triple(const JointDistribution& joint, const char* op) {
  if (joint.arity() != 3) {
    throw Error(ErrorCode::bad_arity,
                std::string(op) + " needs exactly 3 variables, got " +
                    std::to_string(joint.arity()));
  }
}

// The seven marginal entropies of a triple, in a fixed evaluation order so
// identities built from them are reproducible.
struct TripleEntropies {
  double hA, hB, hC, hAB, hAC, hBC, hABC;
};

TripleEntropies triple_entropies(const JointDistribution& joint) {
  const auto& v = joint.variables;
  return TripleEntropies{
      shannon_entropy(marginalize(joint, {v[0]})),
      shannon_entropy(marginalize(joint, {v[1]})),
      shannon_entropy(marginalize(joint, {v[2]})),
      shannon_entropy(marginalize(joint, {v[0], v[1]})),
      shannon_entropy(marginalize(joint, {v[0], v[2]})),
      shannon_entropy(marginalize(joint, {v[1], v[2]})),
      shannon_entropy(joint),
  };
}

}  // namespace

double shannon_entropy(const JointDistribution& joint) {
  double h = 0.0;
  for (double p : joint.probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double mutual_information(const JointDistribution& joint,
                          const std::string& x, const std::string& y) {
  if (x == y) {
    throw Error(ErrorCode::same_label, "'" + x + "' given for both variables");
  }
  const double hx = shannon_entropy(marginalize(joint, {x}));
  const double hy = shannon_entropy(marginalize(joint, {y}));
  const double hxy = shannon_entropy(marginalize(joint, {x, y}));
  return (hx + hy) - hxy;
}

double conditional_entropy(const JointDistribution& joint,
                           const std::string& x,
                           const std::vector<std::string>& given) {
  for (const auto& g : given) {
    if (g == x) {
      throw Error(ErrorCode::overlap,
                  "'" + x + "' appears in the conditioning set");
    }
  }
  if (given.empty()) {
    return shannon_entropy(marginalize(joint, {x}));
  }
  std::vector<std::string> with_x;
  with_x.reserve(given.size() + 1);
  with_x.push_back(x);
  with_x.insert(with_x.end(), given.begin(), given.end());
  const double h_joint = shannon_entropy(marginalize(joint, with_x));
  const double h_given = shannon_entropy(marginalize(joint, given));
  return h_joint - h_given;
}

double conditional_mutual(const JointDistribution& joint, const std::string& x,
                          const std::string& y, const std::string& z) {
  if (x == y || x == z || y == z) {
    throw Error(ErrorCode::same_label,
                "conditional mutual information needs three distinct labels");
  }
  const double hxz = shannon_entropy(marginalize(joint, {x, z}));
  const double hyz = shannon_entropy(marginalize(joint, {y, z}));
  const double hz = shannon_entropy(marginalize(joint, {z}));
  const double hxyz = shannon_entropy(marginalize(joint, {x, y, z}));
  return ((hxz + hyz) - hz) - hxyz;
}

double ternary_mutual(const JointDistribution& joint) {
  require_triple(joint, "ternary mutual information");
  const TripleEntropies e = triple_entropies(joint);
  return (((((e.hA + e.hB) + e.hC) - e.hAB) - e.hAC) - e.hBC) + e.hABC;
}

EntropyDiagram ternary_diagram(const JointDistribution& joint) {
  require_triple(joint, "ternary diagram");
  const TripleEntropies e = triple_entropies(joint);
  return EntropyDiagram{
      e.hABC - e.hBC,                      // H(A|BC)
      e.hABC - e.hAC,                      // H(B|AC)
      e.hABC - e.hAB,                      // H(C|AB)
      ((e.hAB + e.hAC) - e.hA) - e.hABC,   // H(B:C|A)
      ((e.hAB + e.hBC) - e.hB) - e.hABC,   // H(A:C|B)
      ((e.hAC + e.hBC) - e.hC) - e.hABC,   // H(A:B|C)
      (((((e.hA + e.hB) + e.hC) - e.hAB) - e.hAC) - e.hBC) + e.hABC,
  };
}

PairwiseEntropySummary pairwise_summary(const JointDistribution& joint) {
  require_triple(joint, "pairwise summary");
  const TripleEntropies e = triple_entropies(joint);
  return PairwiseEntropySummary{
      e.hA,
      e.hB,
      e.hC,
      (e.hA + e.hB) - e.hAB,
      (e.hA + e.hC) - e.hAC,
      (e.hB + e.hC) - e.hBC,
  };
}

EntropyDiagram diagram_from_summary(const PairwiseEntropySummary& summary,
                                    double delta) {
  const double gbar = summary.iAB - delta;
  const double bbar = summary.iAC - delta;
  const double abar = summary.iBC - delta;
  return EntropyDiagram{
      ((summary.hA - bbar) - gbar) - delta,
      ((summary.hB - abar) - gbar) - delta,
      ((summary.hC - abar) - bbar) - delta,
      abar,
      bbar,
      gbar,
      delta,
  };
}

std::array<double, 3> degree_sums(const PairwiseEntropySummary& summary) {
  return {
      ((summary.hA + summary.iBC) - summary.iAB) - summary.iAC,
      ((summary.hB + summary.iAC) - summary.iAB) - summary.iBC,
      ((summary.hC + summary.iAB) - summary.iAC) - summary.iBC,
  };
}

double mutual_from_correlation(double c) {
  if (!(std::abs(c) <= 1.0)) {
    throw Error(ErrorCode::out_of_range,
                "correlation must lie in [-1,1], got " + std::to_string(c));
  }
  const double a = std::abs(c);
  if (1.0 - a < 1e-15) return 1.0;
  const double x = (1.0 + a) / 2.0;
  const double y = (1.0 - a) / 2.0;
  const double h2 = -x * std::log2(x) - y * std::log2(y);
  return std::max(0.0, 1.0 - h2);
}

}  // namespace entrobell
