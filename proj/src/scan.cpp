#include "entrobell/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <vector>

namespace entrobell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest (lhs - rhs) margin of the family's three inequalities at a point.
double family_margin(Family family, double theta, double phi) {
  const MeasurementSetup setup(theta, phi);
  double best = -1e300;
  if (family == Family::entropic) {
    for (const auto& r : entropic_bell(bell_entropy_summary(setup))) {
      best = std::max(best, r.lhs - r.rhs);
    }
  } else {
    for (const auto& r : conventional_bell(bell_correlations(setup))) {
      best = std::max(best, r.lhs - r.rhs);
    }
  }
  return best;
}

// Derivative-free 1-D maximization of g on [lo, hi], to bracket width tol.
template <typename G>
double golden_max(G&& g, double lo, double hi, double tol) {
  constexpr double kRatio = 0.6180339887498949;  // (sqrt(5)-1)/2
  double a = lo, b = hi;
  double c = b - kRatio * (b - a);
  double d = a + kRatio * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > tol) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kRatio * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kRatio * (b - a);
      gd = g(d);
    }
  }
  return 0.5 * (a + b);
}

// Shortest angular distance to a multiple of 2*pi.
double separation(double angle) { return std::abs(std::remainder(angle, kTwoPi)); }

struct Candidate {
  double value;
  double theta;
  double phi;
};

// Canonical representative key: the family objectives have exact symmetries
// (axis reflections and relabelings), so the global maximum is a set of
// exactly tied points. Preferring small axis separations, then small |phi|,
// then a small B-C separation, keeps the reported optimum stable no matter
// which basin the grid happens to favor at a given resolution.
std::array<double, 5> canonical_key(double theta, double phi) {
  const double sep_t = separation(theta);
  const double sep_p = separation(phi);
  const double sep_bc = separation(theta - phi);
  return {std::max({sep_t, sep_p, sep_bc}), std::abs(phi), sep_bc, theta, phi};
}

bool key_less(const std::array<double, 5>& lhs,
              const std::array<double, 5>& rhs) {
  constexpr double kKeyTolerance = 1e-5;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] < rhs[i] - kKeyTolerance) return true;
    if (lhs[i] > rhs[i] + kKeyTolerance) return false;
  }
  return false;
}

// Alternating golden-section passes on theta then phi until neither moves.
Candidate refine(Family family, double theta, double phi, double step) {
  constexpr double kBracketTolerance = 1e-8;
  constexpr double kMoveTolerance = 1e-7;
  constexpr double kEdge = 1e-9;
  for (int sweep = 0; sweep < 100; ++sweep) {
    const double theta_before = theta;
    const double phi_before = phi;
    theta = golden_max(
        [&](double t) { return family_margin(family, t, phi); },
        std::max(theta - step, kEdge), std::min(theta + step, kPi - kEdge),
        kBracketTolerance);
    phi = golden_max(
        [&](double p) { return family_margin(family, theta, p); },
        phi - step, phi + step, kBracketTolerance);
    if (std::abs(theta - theta_before) < kMoveTolerance &&
        std::abs(phi - phi_before) < kMoveTolerance) {
      break;
    }
  }
  return Candidate{family_margin(family, theta, phi), theta, phi};
}

}  // namespace

std::vector<SweepRow> sweep_phi(double theta, double phi_min, double phi_max,
                                int steps) {
  if (!std::isfinite(theta) || !std::isfinite(phi_min) ||
      !std::isfinite(phi_max)) {
    throw Error(ErrorCode::bad_range, "angles must be finite");
  }
  if (steps < 2) {
    throw Error(ErrorCode::bad_range,
                "need at least 2 steps, got " + std::to_string(steps));
  }
  if (!(phi_min < phi_max)) {
    throw Error(ErrorCode::bad_range, "phi_min must lie below phi_max");
  }
  const double step = (phi_max - phi_min) / static_cast<double>(steps - 1);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double phi = phi_min + static_cast<double>(i) * step;
    const MeasurementSetup setup(theta, phi);
    const auto entropic = entropic_bell(bell_entropy_summary(setup));
    const auto conventional = conventional_bell(bell_correlations(setup));
    rows.push_back(SweepRow{phi, entropic[0].lhs, entropic[1].lhs,
                            entropic[2].lhs, conventional[0].lhs,
                            conventional[1].lhs, conventional[2].lhs});
  }
  return rows;
}

OptimumReport maximize_violation(Family family, int resolution) {
  if (resolution < 2) {
    throw Error(ErrorCode::bad_range, "resolution must be at least 2, got " +
                                          std::to_string(resolution));
  }
  const int r = resolution;
  const double grid_step = kPi / static_cast<double>(r);

  // Pass 1: grid maximum over theta in (0, pi), phi in (-pi, pi].
  double grid_max = -1e300;
  for (int i = 1; i < r; ++i) {
    const double theta = static_cast<double>(i) * grid_step;
    for (int j = 1; j <= 2 * r; ++j) {
      const double phi = -kPi + static_cast<double>(j) * grid_step;
      grid_max = std::max(grid_max, family_margin(family, theta, phi));
    }
  }

  // Pass 2: every grid point near the maximum; the tied basins all appear.
  constexpr double kCollectBand = 1e-3;
  std::vector<Candidate> near;
  for (int i = 1; i < r; ++i) {
    const double theta = static_cast<double>(i) * grid_step;
    for (int j = 1; j <= 2 * r; ++j) {
      const double phi = -kPi + static_cast<double>(j) * grid_step;
      const double v = family_margin(family, theta, phi);
      if (v >= grid_max - kCollectBand) near.push_back({v, theta, phi});
    }
  }
  std::sort(near.begin(), near.end(), [](const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.phi < b.phi;
  });

  // Cluster to one seed per basin.
  constexpr double kClusterRadius = 0.2;
  constexpr std::size_t kMaxSeeds = 64;
  std::vector<Candidate> seeds;
  for (const auto& cand : near) {
    bool fresh = true;
    for (const auto& seed : seeds) {
      const double dt = std::abs(cand.theta - seed.theta);
      const double dp = separation(cand.phi - seed.phi);
      if (std::max(dt, dp) < kClusterRadius) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      seeds.push_back(cand);
      if (seeds.size() >= kMaxSeeds) break;
    }
  }

  // Refine every basin, then pick the canonical representative among the
  // exactly tied refined optima.
  constexpr double kValueTie = 1e-9;
  std::vector<Candidate> refined;
  refined.reserve(seeds.size());
  double best_value = -1e300;
  for (const auto& seed : seeds) {
    const Candidate c = refine(family, seed.theta, seed.phi, 2.0 * grid_step);
    refined.push_back(c);
    best_value = std::max(best_value, c.value);
  }
  const Candidate* winner = nullptr;
  for (const auto& c : refined) {
    if (c.value < best_value - kValueTie) continue;
    if (winner == nullptr ||
        key_less(canonical_key(c.theta, c.phi),
                 canonical_key(winner->theta, winner->phi))) {
      winner = &c;
    }
  }

  const MeasurementSetup setup(winner->theta, winner->phi);
  std::array<InequalityReport, 3> reports =
      family == Family::entropic
          ? entropic_bell(bell_entropy_summary(setup))
          : conventional_bell(bell_correlations(setup));
  std::size_t best_k = 0;
  for (std::size_t k = 1; k < reports.size(); ++k) {
    if (reports[k].lhs - reports[k].rhs >
        reports[best_k].lhs - reports[best_k].rhs) {
      best_k = k;
    }
  }
  return OptimumReport{family, setup.theta, setup.phi, reports[best_k].lhs,
                       reports[best_k].id};
}

void emit_rows(const std::vector<SweepRow>& rows, std::ostream& out) {
  if (rows.empty()) {
    throw Error(ErrorCode::bad_range, "no rows to write");
  }
  out << "phi,LE1,LE2,LE3,LC1,LC2,LC3\n";
  char line[256];
  for (const auto& row : rows) {
    std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  row.phi, row.lE1, row.lE2, row.lE3, row.lC1, row.lC2,
                  row.lC3);
    out << line;
  }
  if (!out) {
    throw Error(ErrorCode::io_error, "failed while writing rows");
  }
}

void emit_rows(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) {
    throw Error(ErrorCode::bad_range, "no rows to write");
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::io_error, "cannot open '" + path + "' for writing");
  }
  emit_rows(rows, file);
  file.flush();
  if (!file) {
    throw Error(ErrorCode::io_error, "failed writing '" + path + "'");
  }
}

}  // namespace entrobell
