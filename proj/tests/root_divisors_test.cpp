#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "permroots/root_divisors.hpp"

using namespace permroots;
using U64List = std::vector<std::uint64_t>;

TEST_CASE("known divisor sets") {
  CHECK(root_divisors(8, 1).members == U64List{1, 2, 4, 8});
  CHECK(root_divisors(2, 3).members == U64List{1, 2});
  CHECK(root_divisors(2, 4).members == U64List{2});
  CHECK(root_divisors(1, 5).members == U64List{1});
  CHECK(root_divisors(12, 3).members == U64List{3, 6, 12});
}

TEST_CASE("parity split partitions the members") {
  RootDivisorSet set = root_divisors(12, 1);
  CHECK(set.odd_members == U64List{1, 3});
  CHECK(set.even_members == U64List{2, 4, 6, 12});
  U64List merged = set.odd_members;
  merged.insert(merged.end(), set.even_members.begin(), set.even_members.end());
  std::sort(merged.begin(), merged.end());
  CHECK(merged == set.members);
}

TEST_CASE("the set at length 1 is the divisor set of k") {
  for (std::uint64_t k : {1ull, 2ull, 6ull, 8ull, 12ull, 36ull, 97ull}) {
    CHECK(root_divisors(k, 1).members == divisors_of(k));
  }
  CHECK(divisors_of(12) == U64List{1, 2, 3, 4, 6, 12});
  CHECK(divisors_of(1) == U64List{1});
}

TEST_CASE("definition and factorization routes agree for k, length <= 100") {
  for (std::uint64_t k = 1; k <= 100; ++k) {
    for (std::uint64_t length = 1; length <= 100; ++length) {
      RootDivisorSet by_def = root_divisors(k, length);
      RootDivisorSet by_fact = root_divisors_by_factorization(k, length);
      REQUIRE_MESSAGE(by_def.members == by_fact.members,
                      "k=" << k << " length=" << length);
      CHECK(by_def.odd_members == by_fact.odd_members);
      CHECK(by_def.even_members == by_fact.even_members);
    }
  }
}

TEST_CASE("membership properties") {
  for (std::uint64_t k = 1; k <= 100; ++k) {
    for (std::uint64_t length = 1; length <= 100; ++length) {
      RootDivisorSet set = root_divisors(k, length);
      REQUIRE(!set.members.empty());
      for (std::uint64_t g : set.members) {
        CHECK(std::gcd(g * length, k) == g);
        CHECK(k % g == 0);
      }
      // 1 is a member exactly when length and k are coprime.
      CHECK((set.members.front() == 1) == (std::gcd(length, k) == 1));
      // Even k and even length force every member even.
      if (k % 2 == 0 && length % 2 == 0) {
        CHECK(set.odd_members.empty());
      }
    }
  }
}

TEST_CASE("rejects k or length of zero") {
  CHECK_THROWS_AS(root_divisors(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(root_divisors(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(root_divisors_by_factorization(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(divisors_of(0), std::invalid_argument);
}
