#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include "jrc/gw.hpp"

using jrc::ConditionVector;
using jrc::CountKey;
using jrc::CountProvider;
using jrc::Int;

namespace {

// Independent oracle: Pascal-triangle binomials and a plain unmemoized
// double-loop recursion, sharing no code with the library path.
Int oracle_binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::vector<Int>> pascal(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    pascal[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Int(1));
    for (int j = 1; j < i; ++j)
      pascal[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pascal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          pascal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int oracle_plane_count(int d) {
  if (d == 1) return 1;
  Int total = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    int d2 = d - d1;
    Int left = oracle_plane_count(d1);
    Int right = oracle_plane_count(d2);
    total += left * right * d1 * d1 * d2 *
             (Int(d2) * oracle_binom(3 * d - 4, 3 * d1 - 2) -
              Int(d1) * oracle_binom(3 * d - 4, 3 * d1 - 1));
  }
  return total;
}

// Same recursion with the second binomial term rewritten through the
// d1 <-> d2 exchange; an algebraically equal route.
Int exchanged_plane_count(int d) {
  if (d == 1) return 1;
  Int total = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    int d2 = d - d1;
    total += jrc::plane_count(d1) * jrc::plane_count(d2) *
             (Int(d1) * d1 * d2 * d2 * jrc::binom(3 * d - 4, 3 * d1 - 2) -
              Int(d1) * d2 * d2 * d2 * jrc::binom(3 * d - 4, 3 * d1 - 3));
  }
  return total;
}

}  // namespace

TEST_CASE("plane counts match the known low-degree values") {
  CHECK(jrc::plane_count(1) == 1);
  CHECK(jrc::plane_count(2) == 1);
  CHECK(jrc::plane_count(3) == 12);
  CHECK(jrc::plane_count(4) == 620);
  CHECK(jrc::plane_count(5) == 87304);
  CHECK_THROWS_AS(jrc::plane_count(0), jrc::invalid_input);
  CHECK_THROWS_AS(jrc::plane_count(-3), jrc::invalid_input);
}

TEST_CASE("plane counts agree with the naive oracle") {
  for (int d = 1; d <= 7; ++d) {
    CAPTURE(d);
    REQUIRE(jrc::plane_count(d) == oracle_plane_count(d));
  }
}

TEST_CASE("plane count recursion symmetry") {
  for (int d = 1; d <= 8; ++d) {
    CAPTURE(d);
    REQUIRE(jrc::plane_count(d) == exchanged_plane_count(d));
  }
}

TEST_CASE("plane counts are positive and memo-stable") {
  for (int d = 1; d <= 12; ++d) {
    Int first = jrc::plane_count(d);
    REQUIRE(first > 0);
    REQUIRE(jrc::plane_count(d) == first);
  }
}

TEST_CASE("higher-degree plane counts match the published values") {
  CHECK(jrc::plane_count(6) == Int("26312976"));
  CHECK(jrc::plane_count(7) == Int("14616808192"));
  CHECK(jrc::plane_count(8) == Int("13525751027392"));
}

TEST_CASE("the recursion stays exact out to degree 20") {
  Int n20 = jrc::plane_count(20);
  CHECK(n20 > 0);
  CHECK(n20 == jrc::plane_count(20));
  CHECK(n20 > jrc::plane_count(19));
  CHECK(n20.str().size() > 30);  // far past any fixed-width integer
}

TEST_CASE("plane counts are safe to query concurrently") {
  std::vector<std::thread> workers;
  std::vector<Int> results(8);
  for (int i = 0; i < 8; ++i)
    workers.emplace_back([&results, i] { results[static_cast<std::size_t>(i)] = jrc::plane_count(9 + i % 3); });
  for (auto& worker : workers) worker.join();
  for (int i = 0; i < 8; ++i)
    REQUIRE(results[static_cast<std::size_t>(i)] == jrc::plane_count(9 + i % 3));
}

TEST_CASE("condition vectors know their expected dimension") {
  ConditionVector eleven = ConditionVector::plane_points(11);
  CHECK(eleven.expected_dim(4) == 0);
  CHECK(ConditionVector::plane_points(10).expected_dim(4) == 1);
  CHECK_THROWS_AS(ConditionVector(2, {1, 2}), jrc::invalid_input);
  CHECK_THROWS_AS(ConditionVector(1, {2}), jrc::invalid_input);
}

TEST_CASE("count dispatch for the plane") {
  CountProvider provider;
  CHECK(provider.count(4, ConditionVector::plane_points(11)) == 620);
  CHECK(provider.count(2, ConditionVector::plane_points(5)) == 1);

  // Codimension above the ambient dimension empties the condition.
  CHECK(provider.count(2, ConditionVector(2, {4, 2, 2})) == 0);

  CHECK_THROWS_WITH(provider.count(4, ConditionVector::plane_points(9)),
                    "not a finite count");
}

TEST_CASE("counts beyond the plane come from the override table") {
  CountProvider provider;
  // Lines in P^3 through two generic points.
  ConditionVector two_points(3, {3, 3});
  REQUIRE(two_points.expected_dim(1) == 0);
  CHECK_THROWS_AS(provider.count(1, two_points), jrc::unavailable);

  provider.add_override(CountKey(3, 1, {3, 3}), Int(1));
  CHECK(provider.count(1, two_points) == 1);

  // The override key is a codimension multiset; order is immaterial.
  provider.add_override(CountKey(3, 2, {3, 3, 3, 3}), Int(96));
  CHECK(provider.count(2, ConditionVector(3, {3, 3, 3, 3})) == 96);

  // Oversized codimensions return zero regardless of any override.
  provider.add_override(CountKey(3, 1, {4, 2}), Int(7));
  REQUIRE(ConditionVector(3, {4, 2}).expected_dim(1) == 0);
  CHECK(provider.count(1, ConditionVector(3, {4, 2})) == 0);
}

TEST_CASE("count override values must be nonnegative") {
  CountProvider provider;
  CHECK_THROWS_AS(provider.add_override(CountKey(3, 1, {3, 3}), Int(-1)), jrc::invalid_input);
}

TEST_CASE("count_if_finite reports impossible dimensions as no count") {
  CountProvider provider;
  CHECK(!provider.count_if_finite(4, ConditionVector::plane_points(9)).has_value());
  CHECK(provider.count_if_finite(4, ConditionVector::plane_points(11)).value() == 620);
}
