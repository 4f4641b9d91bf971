#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "entrobell/error.hpp"
#include "entrobell/report.hpp"

namespace entrobell {

// A dichotomic (±1-valued) measurement outcome.
enum class Outcome : int { plus = +1, minus = -1 };

inline int value(Outcome o) noexcept { return static_cast<int>(o); }

// Explicit probability table over 1-3 named dichotomic variables.
//
// Entries are ordered lexicographically with +1 before -1: the table index
// carries one bit per variable, variable 0 in the most significant position,
// bit 0 meaning that variable came out +1. Index 0 is the all-plus outcome;
// for two variables the order is (+,+), (+,-), (-,+), (-,-).
//
// Instances are validated on construction (see make_joint) and treated as
// immutable afterwards; every operation in this library is a pure function,
// so values can be shared freely across threads.
struct JointDistribution {
  std::vector<std::string> variables;
  std::vector<double> probabilities;

  int arity() const noexcept { return static_cast<int>(variables.size()); }
};

// Population counts over the 8 combinations of three boolean properties
// a, b, c. Index = 4*[a fails] + 2*[b fails] + [c fails], so index 0 counts
// objects having all three properties. Cells are capped at 1e15 so that all
// derived sums stay exactly representable in doubles.
struct CountTable {
  std::array<std::uint64_t, 8> counts{};

  std::uint64_t total() const noexcept;
};

// Validates and builds a distribution. The table must have exactly 2^n
// entries for n = |labels| in the index order documented above.
// Errors: BAD_ARITY (label count not in 1..3, duplicate labels, wrong table
// size), NEGATIVE_PROBABILITY, NOT_NORMALIZED (total off 1 by more than
// 1e-9; no silent renormalization is performed).
JointDistribution make_joint(std::vector<std::string> labels,
                             std::vector<double> table);

// Sums out every variable not listed in keep; the result's variables follow
// the order of keep. Dropping happens one variable at a time in the original
// variable order, so chained calls and a single call produce bitwise
// identical tables. Errors: UNKNOWN_LABEL, SAME_LABEL (duplicate in keep),
// BAD_ARITY (empty keep).
JointDistribution marginalize(const JointDistribution& joint,
                              const std::vector<std::string>& keep);

// Correlation coefficient sum_{x,y} x*y*p(x,y) of a two-variable
// distribution, clamped into [-1,1] to absorb ingestion tolerance.
// Errors: BAD_ARITY.
double correlation(const JointDistribution& pair);

// The combination ab + ac - bc of three fixed ±1 outcomes. Always <= 1:
// it equals 1 when a == b and -1 ± 2 otherwise.
int deterministic_bound(Outcome a, Outcome b, Outcome c) noexcept;

// Validates a count table: at least one object in total, each cell <= 1e15.
// Errors: OUT_OF_RANGE.
CountTable make_count_table(const std::array<std::uint64_t, 8>& counts);

// The counting inequality n(a, not b) <= n(a, not c) + n(not b, c). This
// holds identically for every count table, so the report is never violated.
InequalityReport wigner_check(const CountTable& table);

// Deterministic pseudo-random distribution over n variables (labels A, B, C
// as needed): 2^n independent draws from a fixed continuous distribution on
// (0,1), normalized. Intended as a property-test driver; not uniform over
// the simplex. Errors: BAD_ARITY (n not in 1..3).
JointDistribution random_joint(std::uint64_t seed, int n);

}  // namespace entrobell
