#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "entrobell/probability.hpp"
#include "entrobell/quantum.hpp"
#include "oracles.hpp"

using namespace entrobell;

namespace {
constexpr double kPi = std::numbers::pi;

template <typename Fn>
bool throws_code(ErrorCode want, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}
}  // namespace

TEST_SUITE("probability") {

TEST_CASE("make_joint accepts valid tables") {
  const auto bit = make_joint({"A"}, {0.5, 0.5});
  CHECK(bit.arity() == 1);
  CHECK(bit.probabilities == std::vector<double>{0.5, 0.5});

  const auto triple =
      make_joint({"A", "B", "C"}, std::vector<double>(8, 0.125));
  CHECK(triple.arity() == 3);
  CHECK(triple.variables == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("make_joint rejects invalid tables") {
  CHECK(throws_code(ErrorCode::not_normalized, [] {
    make_joint({"A", "B"}, {0.6, 0.5, 0.0, 0.0});  // sums to 1.1
  }));
  CHECK(throws_code(ErrorCode::negative_probability, [] {
    make_joint({"A", "B"}, {0.6, 0.5, -0.1, 0.0});
  }));
  CHECK(throws_code(ErrorCode::bad_arity, [] {
    make_joint({}, {1.0});  // no variables
  }));
  CHECK(throws_code(ErrorCode::bad_arity, [] {
    make_joint({"A", "B", "C", "D"}, std::vector<double>(16, 0.0625));
  }));
  CHECK(throws_code(ErrorCode::bad_arity, [] {
    make_joint({"A", "A"}, {0.25, 0.25, 0.25, 0.25});  // duplicate label
  }));
  CHECK(throws_code(ErrorCode::bad_arity, [] {
    make_joint({"A", "B"}, {0.5, 0.5});  // wrong table size
  }));
  // Just inside / outside the normalization tolerance.
  CHECK_NOTHROW(make_joint({"A"}, {0.5, 0.5 + 0.9e-9}));
  CHECK(throws_code(ErrorCode::not_normalized,
                    [] { make_joint({"A"}, {0.5, 0.5 + 1.1e-9}); }));
}

TEST_CASE("marginalize sums out dropped variables") {
  const auto uniform3 =
      make_joint({"A", "B", "C"}, std::vector<double>(8, 0.125));
  const auto pair = marginalize(uniform3, {"A", "B"});
  CHECK(pair.variables == std::vector<std::string>{"A", "B"});
  CHECK(pair.probabilities == std::vector<double>{0.25, 0.25, 0.25, 0.25});

  // A and B fair and independent, C = A*B (as ±1 products).
  const auto xor_triple = make_joint(
      {"A", "B", "C"}, {0.25, 0.0, 0.0, 0.25, 0.0, 0.25, 0.25, 0.0});
  const auto ac = marginalize(xor_triple, {"A", "C"});
  CHECK(ac.probabilities == std::vector<double>{0.25, 0.25, 0.25, 0.25});

  const auto same = marginalize(xor_triple, {"A", "B", "C"});
  CHECK(same.variables == xor_triple.variables);
  CHECK(same.probabilities == xor_triple.probabilities);
}

TEST_CASE("marginalize follows the keep order") {
  const auto t = random_joint(7, 3);
  const auto ca = marginalize(t, {"C", "A"});
  const auto ac = marginalize(t, {"A", "C"});
  CHECK(ca.variables == std::vector<std::string>{"C", "A"});
  // Same table up to the axis transpose.
  CHECK(ca.probabilities[0] == ac.probabilities[0]);
  CHECK(ca.probabilities[1] == ac.probabilities[2]);
  CHECK(ca.probabilities[2] == ac.probabilities[1]);
  CHECK(ca.probabilities[3] == ac.probabilities[3]);
}

TEST_CASE("marginalize commutes exactly") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto t = random_joint(seed, 3);
    const auto chained = marginalize(marginalize(t, {"B", "C"}), {"C"});
    const auto direct = marginalize(t, {"C"});
    REQUIRE(chained.probabilities.size() == direct.probabilities.size());
    for (std::size_t i = 0; i < direct.probabilities.size(); ++i) {
      CHECK(chained.probabilities[i] == direct.probabilities[i]);  // bitwise
    }
  }
}

TEST_CASE("marginalize rejects bad keep lists") {
  const auto t = random_joint(1, 3);
  CHECK(throws_code(ErrorCode::unknown_label,
                    [&] { marginalize(t, {"A", "X"}); }));
  CHECK(throws_code(ErrorCode::same_label,
                    [&] { marginalize(t, {"A", "A"}); }));
  CHECK(throws_code(ErrorCode::bad_arity, [&] { marginalize(t, {}); }));
}

TEST_CASE("correlation of simple pairs") {
  CHECK(correlation(make_joint({"X", "Y"}, {0.5, 0.0, 0.0, 0.5})) == 1.0);
  CHECK(correlation(make_joint({"X", "Y"}, {0.25, 0.25, 0.25, 0.25})) == 0.0);
  CHECK(correlation(make_joint({"X", "Y"}, {0.0, 0.5, 0.5, 0.0})) == -1.0);

  const auto singlet = singlet_pair_distribution(0.0, kPi / 3.0);
  CHECK(std::abs(correlation(singlet) - (-0.5)) <= 1e-12);

  CHECK(throws_code(ErrorCode::bad_arity,
                    [] { correlation(random_joint(1, 3)); }));
}

TEST_CASE("correlation stays within [-1,1]") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const double c = correlation(random_joint(seed, 2));
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("deterministic outcome combination never exceeds 1") {
  CHECK(deterministic_bound(Outcome::plus, Outcome::plus, Outcome::plus) == 1);
  CHECK(deterministic_bound(Outcome::plus, Outcome::minus, Outcome::plus) ==
        1);
  CHECK(deterministic_bound(Outcome::plus, Outcome::minus, Outcome::minus) ==
        -3);
  const Outcome vals[2] = {Outcome::plus, Outcome::minus};
  for (Outcome a : vals) {
    for (Outcome b : vals) {
      for (Outcome c : vals) {
        CHECK(deterministic_bound(a, b, c) <= 1);
        // Cyclic relabelings a->b->c->a of the same combination.
        CHECK(deterministic_bound(b, c, a) <= 1);
        CHECK(deterministic_bound(c, a, b) <= 1);
      }
    }
  }
}

TEST_CASE("counting inequality holds on simple tables") {
  // All N objects have a, not-b, c: index 2.
  std::array<std::uint64_t, 8> all_one_cell{};
  all_one_cell[2] = 1000;
  const auto r1 = wigner_check(make_count_table(all_one_cell));
  CHECK(r1.lhs == 1000.0);
  CHECK(r1.rhs == 1000.0);
  CHECK_FALSE(r1.violated);

  // One object with not-a, b, not-c: index 5.
  std::array<std::uint64_t, 8> one_object{};
  one_object[5] = 1;
  const auto r2 = wigner_check(make_count_table(one_object));
  CHECK(r2.lhs == 0.0);
  CHECK(r2.rhs == 0.0);
  CHECK_FALSE(r2.violated);
}

TEST_CASE("counting inequality never reports violations") {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<std::uint64_t, 8> cells{};
    std::uint64_t total = 0;
    for (auto& c : cells) {
      c = rng.next() % 1000;
      total += c;
    }
    if (total == 0) cells[0] = 1;
    const auto table = make_count_table(cells);
    const auto report = wigner_check(table);
    CHECK_FALSE(report.violated);
    // lhs counts exactly the objects with a and not b.
    CHECK(report.lhs ==
          static_cast<double>(table.counts[2] + table.counts[3]));
    CHECK(report.margin >= 0.0);
  }
}

TEST_CASE("count table validation") {
  CHECK(throws_code(ErrorCode::out_of_range,
                    [] { make_count_table(std::array<std::uint64_t, 8>{}); }));
  std::array<std::uint64_t, 8> huge{};
  huge[0] = 2000000000000000ull;  // above the 1e15 cap
  CHECK(throws_code(ErrorCode::out_of_range, [&] { make_count_table(huge); }));
}

TEST_CASE("random_joint is seeded and normalized") {
  const auto a = random_joint(1, 3);
  const auto b = random_joint(1, 3);
  CHECK(a.probabilities == b.probabilities);

  double sum = 0.0;
  for (double p : a.probabilities) sum += p;
  CHECK(std::abs(sum - 1.0) <= 1e-12);

  const auto c = random_joint(2, 3);
  CHECK(a.probabilities != c.probabilities);

  CHECK(throws_code(ErrorCode::bad_arity, [] { random_joint(1, 0); }));
  CHECK(throws_code(ErrorCode::bad_arity, [] { random_joint(1, 4); }));
}

}  // TEST_SUITE
