#include <doctest.h>

#include <cmath>

#include "entrobell/entropy.hpp"
#include "entrobell/probability.hpp"

using namespace entrobell;

namespace {

template <typename Fn>
bool throws_code(ErrorCode want, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

// Fair, independent A and B with C their ±1 product. Every pair marginal is
// uniform, yet the triple is deterministic given any two variables.
JointDistribution xor_triple() {
  return make_joint({"A", "B", "C"},
                    {0.25, 0.0, 0.0, 0.25, 0.0, 0.25, 0.25, 0.0});
}

// Pair of ±1 variables with uniform marginals and correlation c.
JointDistribution correlated_pair(double c) {
  const double same = (1.0 + c) / 4.0;
  const double diff = (1.0 - c) / 4.0;
  return make_joint({"X", "Y"}, {same, diff, diff, same});
}

constexpr double kH34 = 0.8112781244591328;  // -(3/4)lg(3/4)-(1/4)lg(1/4)

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("shannon_entropy on closed-form tables") {
  CHECK(shannon_entropy(make_joint({"A", "B"}, {0.25, 0.25, 0.25, 0.25})) ==
        2.0);
  CHECK(shannon_entropy(make_joint({"A"}, {1.0, 0.0})) == 0.0);
  CHECK(shannon_entropy(make_joint({"A"}, {0.0, 1.0})) == 0.0);
  CHECK(std::abs(shannon_entropy(make_joint({"A"}, {0.75, 0.25})) - kH34) <=
        1e-15);
  // Zero cells contribute nothing: same entropy with or without them.
  CHECK(shannon_entropy(xor_triple()) == 2.0);
}

TEST_CASE("mutual_information on exact cases") {
  CHECK(mutual_information(correlated_pair(0.0), "X", "Y") == 0.0);
  CHECK(mutual_information(correlated_pair(1.0), "X", "Y") == 1.0);
  const auto t = xor_triple();
  CHECK(mutual_information(t, "A", "B") == 0.0);
  CHECK(mutual_information(t, "B", "A") == 0.0);

  CHECK(throws_code(ErrorCode::same_label,
                    [&] { mutual_information(t, "A", "A"); }));
  CHECK(throws_code(ErrorCode::unknown_label,
                    [&] { mutual_information(t, "A", "X"); }));
}

TEST_CASE("conditional_entropy") {
  const auto pair = correlated_pair(0.5);
  CHECK(std::abs(conditional_entropy(pair, "X", {"Y"}) - kH34) <= 1e-12);
  // Empty condition falls back to the marginal entropy.
  CHECK(conditional_entropy(pair, "X", {}) == 1.0);

  const auto t = xor_triple();
  // C is determined by A and B together but independent of each alone.
  CHECK(std::abs(conditional_entropy(t, "C", {"A", "B"})) <= 1e-15);
  CHECK(conditional_entropy(t, "C", {"A"}) == 1.0);

  CHECK(throws_code(ErrorCode::overlap,
                    [&] { conditional_entropy(t, "A", {"B", "A"}); }));
  CHECK(throws_code(ErrorCode::same_label,
                    [&] { conditional_entropy(t, "A", {"B", "B"}); }));
  CHECK(throws_code(ErrorCode::unknown_label,
                    [&] { conditional_entropy(t, "Z", {"B"}); }));
}

TEST_CASE("conditional_mutual on the product triple") {
  const auto t = xor_triple();
  // Conditioning on the product makes the two factors fully dependent.
  CHECK(conditional_mutual(t, "A", "B", "C") == 1.0);
  CHECK(conditional_mutual(t, "A", "C", "B") == 1.0);
  CHECK(conditional_mutual(t, "B", "C", "A") == 1.0);

  CHECK(throws_code(ErrorCode::same_label,
                    [&] { conditional_mutual(t, "A", "A", "C"); }));
  CHECK(throws_code(ErrorCode::unknown_label,
                    [&] { conditional_mutual(t, "A", "B", "Q"); }));
}

TEST_CASE("ternary_mutual can be negative") {
  CHECK(ternary_mutual(xor_triple()) == -1.0);
  const auto uniform =
      make_joint({"A", "B", "C"}, std::vector<double>(8, 0.125));
  CHECK(ternary_mutual(uniform) == 0.0);
  CHECK(throws_code(ErrorCode::bad_arity,
                    [] { ternary_mutual(random_joint(1, 2)); }));
}

TEST_CASE("ternary_diagram of the product triple") {
  const auto d = ternary_diagram(xor_triple());
  CHECK(d.alpha == 0.0);
  CHECK(d.beta == 0.0);
  CHECK(d.gamma == 0.0);
  CHECK(d.abar == 1.0);
  CHECK(d.bbar == 1.0);
  CHECK(d.gbar == 1.0);
  CHECK(d.delta == -1.0);
  CHECK(throws_code(ErrorCode::bad_arity,
                    [] { ternary_diagram(random_joint(1, 1)); }));
}

TEST_CASE("pairwise_summary of the product triple") {
  const auto s = pairwise_summary(xor_triple());
  CHECK(s.hA == 1.0);
  CHECK(s.hB == 1.0);
  CHECK(s.hC == 1.0);
  CHECK(s.iAB == 0.0);
  CHECK(s.iAC == 0.0);
  CHECK(s.iBC == 0.0);
  const auto sums = degree_sums(s);
  CHECK(sums[0] == 1.0);
  CHECK(sums[1] == 1.0);
  CHECK(sums[2] == 1.0);
}

TEST_CASE("diagram entries reconstruct the joint entropies") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto t = random_joint(seed, 3);
    const auto d = ternary_diagram(t);
    const auto s = pairwise_summary(t);

    const double total = shannon_entropy(t);
    const double cells =
        d.alpha + d.beta + d.gamma + d.abar + d.bbar + d.gbar + d.delta;
    CHECK(std::abs(cells - total) <= 1e-9);

    CHECK(std::abs((d.bbar + d.gbar + d.delta + d.alpha) - s.hA) <= 1e-9);
    CHECK(std::abs((d.gbar + d.delta) - s.iAB) <= 1e-9);
    CHECK(std::abs((d.abar + d.delta) - s.iBC) <= 1e-9);

    // Every cell but delta is non-negative for classical inputs.
    CHECK(d.alpha >= -1e-9);
    CHECK(d.beta >= -1e-9);
    CHECK(d.gamma >= -1e-9);
    CHECK(d.abar >= -1e-9);
    CHECK(d.bbar >= -1e-9);
    CHECK(d.gbar >= -1e-9);
  }
}

TEST_CASE("diagram_from_summary inverts the summary") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto t = random_joint(seed, 3);
    const auto d = ternary_diagram(t);
    const auto r = diagram_from_summary(pairwise_summary(t), d.delta);
    CHECK(std::abs(r.alpha - d.alpha) <= 1e-9);
    CHECK(std::abs(r.beta - d.beta) <= 1e-9);
    CHECK(std::abs(r.gamma - d.gamma) <= 1e-9);
    CHECK(std::abs(r.abar - d.abar) <= 1e-9);
    CHECK(std::abs(r.bbar - d.bbar) <= 1e-9);
    CHECK(std::abs(r.gbar - d.gbar) <= 1e-9);
    CHECK(r.delta == d.delta);
  }
}

TEST_CASE("degree_sums match the diagram cell sums") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto t = random_joint(seed, 3);
    const auto d = ternary_diagram(t);
    const auto sums = degree_sums(pairwise_summary(t));
    CHECK(std::abs(sums[0] - (d.alpha + d.abar)) <= 1e-9);
    CHECK(std::abs(sums[1] - (d.beta + d.bbar)) <= 1e-9);
    CHECK(std::abs(sums[2] - (d.gamma + d.gbar)) <= 1e-9);
  }
}

TEST_CASE("mutual_from_correlation special values") {
  CHECK(mutual_from_correlation(0.0) == 0.0);
  CHECK(mutual_from_correlation(1.0) == 1.0);
  CHECK(mutual_from_correlation(-1.0) == 1.0);
  CHECK(mutual_from_correlation(1.0 - 1e-16) == 1.0);  // within the 1-ulp gap
  CHECK(std::abs(mutual_from_correlation(0.5) - 0.18872187554086717) <=
        1e-15);
  CHECK(throws_code(ErrorCode::out_of_range,
                    [] { mutual_from_correlation(1.0 + 1e-9); }));
  CHECK(throws_code(ErrorCode::out_of_range,
                    [] { mutual_from_correlation(-1.5); }));
}

TEST_CASE("mutual_from_correlation is even and monotone in |c|") {
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double c = i / 1000.0;
    const double f = mutual_from_correlation(c);
    CHECK(f == mutual_from_correlation(-c));  // bitwise even
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("mutual_from_correlation matches the table computation") {
  for (int i = -99; i <= 99; ++i) {
    const double c = i / 100.0;
    const double direct = mutual_information(correlated_pair(c), "X", "Y");
    CHECK(std::abs(mutual_from_correlation(c) - direct) <= 1e-12);
  }
}

}  // TEST_SUITE
