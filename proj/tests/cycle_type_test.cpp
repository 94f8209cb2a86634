#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "permroots/cycle_type.hpp"
#include "permroots/oracle.hpp"

using namespace permroots;

namespace {

// Independent partition counter: coin-style DP over part sizes.
std::uint64_t partition_count(std::uint64_t n) {
  std::vector<std::uint64_t> dp(n + 1, 0);
  dp[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part) {
    for (std::uint64_t s = part; s <= n; ++s) {
      dp[s] += dp[s - part];
    }
  }
  return dp[n];
}

}  // namespace

TEST_CASE("parse accepts the grammar") {
  CycleType a = parse_cycle_type("1^4");
  CHECK(a.parts() == CycleType::Parts{{1, 4}});
  CHECK(a.size() == 4);

  CycleType b = parse_cycle_type("2^2,5");
  CHECK(b.parts() == CycleType::Parts{{2, 2}, {5, 1}});
  CHECK(b.size() == 9);

  CHECK(parse_cycle_type("5,2^2") == b);
  CHECK(parse_cycle_type("  2^2 , 5 ") == b);
  CHECK(parse_cycle_type("").empty());
  CHECK(parse_cycle_type("   ").empty());
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_cycle_type("1^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("0^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("2^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("2^3,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("3 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("99999999999999999999999"), std::invalid_argument);

  CHECK_THROWS_WITH_AS(parse_cycle_type("2^3,x"),
                       "cycle type syntax error at position 4: expected cycle length",
                       std::invalid_argument);
}

TEST_CASE("format is canonical and round-trips") {
  CHECK(format_cycle_type(parse_cycle_type("5,2^2")) == "2^2,5^1");
  CHECK(format_cycle_type(CycleType{}) == "");

  // parse(format(t)) == t on random valid types.
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    CycleType::Parts parts;
    int terms = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int t = 0; t < terms; ++t) {
      parts[std::uniform_int_distribution<std::uint64_t>(1, 20)(rng)] =
          std::uniform_int_distribution<std::uint64_t>(1, 6)(rng);
    }
    CycleType type(parts);
    CHECK(parse_cycle_type(format_cycle_type(type)) == type);
  }

  // format(parse(s)) == s on canonical text.
  for (const char* canonical : {"", "1^4", "2^2,5^1", "1^1,3^2,10^1"}) {
    CHECK(format_cycle_type(parse_cycle_type(canonical)) == canonical);
  }
}

TEST_CASE("constructor enforces invariants") {
  CHECK_THROWS_AS(CycleType({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CycleType({{3, 0}}), std::invalid_argument);
  CHECK(CycleType({{3, 2}, {1, 1}}).size() == 7);
}

TEST_CASE("partitions_of enumerates every cycle type once") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == parse_cycle_type("1^3"));
  CHECK(p3[1] == parse_cycle_type("1^1,2^1"));
  CHECK(p3[2] == parse_cycle_type("3^1"));

  CHECK(partitions_of(7).size() == 15);

  for (std::uint64_t n = 0; n <= 12; ++n) {
    auto types = partitions_of(n);
    CHECK(types.size() == partition_count(n));
    for (std::size_t i = 0; i < types.size(); ++i) {
      CHECK(types[i].size() == n);
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        CHECK_FALSE(types[i] == types[j]);
      }
    }
  }
}

TEST_CASE("parity of a type") {
  CHECK(parity_of_type(parse_cycle_type("1^4")) == 1);
  CHECK(parity_of_type(parse_cycle_type("2^1")) == -1);
  CHECK(parity_of_type(parse_cycle_type("3^1,4^1")) == -1);
  CHECK(parity_of_type(CycleType{}) == 1);
}

TEST_CASE("parity matches the permutation oracle for n <= 7") {
  for (std::uint32_t n = 0; n <= 7; ++n) {
    for (const CycleType& type : partitions_of(n)) {
      CHECK(parity_of_type(type) == parity_of(canonical_of_type(type)));
    }
  }
}
