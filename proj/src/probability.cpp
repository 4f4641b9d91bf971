#include "entrobell/probability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace entrobell {

namespace {

constexpr double kNormalizationTolerance = 1e-9;
constexpr std::uint64_t kMaxCount = 1000000000000000ull;  // 1e15

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::size_t position_of(const std::vector<std::string>& variables,
                        const std::string& label) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == label) return i;
  }
  throw Error(ErrorCode::unknown_label, "no variable named '" + label + "'");
}

// Sums one variable out of the table. With variable 0 in the most
// significant index position, removing the variable at `pos` pairs up the
// entries whose indices differ only in bit (n-1-pos).
JointDistribution drop_variable(const JointDistribution& joint,
                                std::size_t pos) {
  const std::size_t n = joint.variables.size();
  const std::size_t m = n - 1;
  std::vector<std::string> variables;
  variables.reserve(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != pos) variables.push_back(joint.variables[i]);
  }
  std::vector<double> table(std::size_t{1} << m);
  const std::size_t low_bits = m - pos;  // variables after pos
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const std::size_t high = r >> low_bits;
    const std::size_t low = r & low_mask;
    const std::size_t base = (high << (low_bits + 1)) | low;
    const std::size_t with_minus = base | (std::size_t{1} << low_bits);
    table[r] = joint.probabilities[base] + joint.probabilities[with_minus];
  }
  return JointDistribution{std::move(variables), std::move(table)};
}

// Strictly interior uniform draw on (0,1) with 53 significant bits. Built
// by hand so that seeded sequences are identical on every platform.
double uniform_unit(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::uint64_t CountTable::total() const noexcept {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

JointDistribution make_joint(std::vector<std::string> labels,
                             std::vector<double> table) {
  const std::size_t n = labels.size();
  if (n < 1 || n > 3) {
    throw Error(ErrorCode::bad_arity,
                "expected 1 to 3 variables, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) {
        throw Error(ErrorCode::bad_arity,
                    "duplicate variable label '" + labels[i] + "'");
      }
    }
  }
  const std::size_t want = std::size_t{1} << n;
  if (table.size() != want) {
    throw Error(ErrorCode::bad_arity,
                "expected " + std::to_string(want) + " probabilities, got " +
                    std::to_string(table.size()));
  }
  double sum = 0.0;
  for (double p : table) {
    if (!(p >= 0.0)) {
      throw Error(ErrorCode::negative_probability,
                  "probability " + fmt(p) + " is not a non-negative number");
    }
    sum += p;
  }
  if (!(std::abs(sum - 1.0) <= kNormalizationTolerance)) {
    throw Error(ErrorCode::not_normalized,
                "probabilities sum to " + fmt(sum) + ", not 1");
  }
  return JointDistribution{std::move(labels), std::move(table)};
}

JointDistribution marginalize(const JointDistribution& joint,
                              const std::vector<std::string>& keep) {
  if (keep.empty()) {
    throw Error(ErrorCode::bad_arity, "keep list is empty");
  }
  std::vector<std::size_t> keep_pos;
  keep_pos.reserve(keep.size());
  for (const auto& label : keep) {
    const std::size_t pos = position_of(joint.variables, label);
    if (std::find(keep_pos.begin(), keep_pos.end(), pos) != keep_pos.end()) {
      throw Error(ErrorCode::same_label,
                  "label '" + label + "' listed twice in keep");
    }
    keep_pos.push_back(pos);
  }

  // Drop unwanted variables earliest-first so the summation order does not
  // depend on how the call is split up.
  JointDistribution current = joint;
  for (const auto& name : joint.variables) {
    if (std::find(keep.begin(), keep.end(), name) != keep.end()) continue;
    current = drop_variable(current, position_of(current.variables, name));
  }

  if (current.variables == keep) return current;

  // Reorder axes to the requested keep order; a pure bit permutation.
  const std::size_t m = keep.size();
  std::vector<std::size_t> target_bit(m);  // per current variable
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t q = 0;
    while (keep[q] != current.variables[i]) ++q;
    target_bit[i] = m - 1 - q;
  }
  std::vector<double> table(std::size_t{1} << m);
  for (std::size_t s = 0; s < table.size(); ++s) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t bit = (s >> (m - 1 - i)) & 1u;
      t |= bit << target_bit[i];
    }
    table[t] = current.probabilities[s];
  }
  return JointDistribution{keep, std::move(table)};
}

double correlation(const JointDistribution& pair) {
  if (pair.arity() != 2) {
    throw Error(ErrorCode::bad_arity,
                "correlation needs exactly 2 variables, got " +
                    std::to_string(pair.arity()));
  }
  const auto& p = pair.probabilities;
  const double c = ((p[0] - p[1]) - p[2]) + p[3];
  return std::clamp(c, -1.0, 1.0);
}

int deterministic_bound(Outcome a, Outcome b, Outcome c) noexcept {
  const int av = value(a);
  const int bv = value(b);
  const int cv = value(c);
  return av * bv + av * cv - bv * cv;
}

CountTable make_count_table(const std::array<std::uint64_t, 8>& counts) {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) {
    if (c > kMaxCount) {
      throw Error(ErrorCode::out_of_range,
                  "count " + std::to_string(c) + " exceeds 1e15");
    }
    sum += c;
  }
  if (sum == 0) {
    throw Error(ErrorCode::out_of_range, "count table is entirely zero");
  }
  return CountTable{counts};
}

InequalityReport wigner_check(const CountTable& table) {
  const auto& c = table.counts;
  // n(a, not b) vs n(a, not c) + n(not b, c); every cell <= 1e15, so the
  // double arithmetic below is exact.
  const double lhs = static_cast<double>(c[2] + c[3]);
  const double rhs = static_cast<double>((c[1] + c[3]) + (c[2] + c[6]));
  return make_report(InequalityId::wigner, lhs, rhs);
}

JointDistribution random_joint(std::uint64_t seed, int n) {
  if (n < 1 || n > 3) {
    throw Error(ErrorCode::bad_arity,
                "arity must be 1, 2 or 3, got " + std::to_string(n));
  }
  std::mt19937_64 engine(seed);
  std::vector<double> table(std::size_t{1} << n);
  double total = 0.0;
  for (double& p : table) {
    p = uniform_unit(engine);
    total += p;
  }
  for (double& p : table) p /= total;
  static const std::vector<std::string> kLabels = {"A", "B", "C"};
  return make_joint(
      std::vector<std::string>(kLabels.begin(), kLabels.begin() + n),
      std::move(table));
}

}  // namespace entrobell
