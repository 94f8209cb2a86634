#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "permroots/counting.hpp"
#include "permroots/oracle.hpp"
#include "permroots/series.hpp"

using namespace permroots;

TEST_CASE("root multiplicity closed form") {
  CHECK(root_multiplicity(2, 1, 2, 1) == 1);
  CHECK(root_multiplicity(2, 2, 2, 1) == 2);
  CHECK(root_multiplicity(7, 3, 5, 0) == 1);  // empty product of cycles
  CHECK(root_multiplicity(2, 2, 1, 1) == 0);  // 1 is not a divisor of (2, 2)
  CHECK(root_multiplicity(2, 1, 2, 3) == factorial(6) / (8 * 6));
}

TEST_CASE("sign of a block of equal cycles") {
  CHECK(sign_of_block(1, 2, 1) == -1);  // one transposition
  CHECK(sign_of_block(2, 2, 1) == -1);  // one 4-cycle
  CHECK(sign_of_block(3, 1, 2) == 1);   // two 3-cycles
  CHECK(sign_of_block(5, 7, 0) == 1);   // identity block
}

TEST_CASE("sign of a block agrees with the cycle-type parity") {
  for (std::uint64_t k = 1; k <= 12; ++k) {
    for (std::uint64_t length = 1; length <= 10; ++length) {
      for (std::uint64_t g : root_divisors(k, length).members) {
        if (length * g > 10) {
          continue;
        }
        for (std::uint64_t p = 1; p <= 3; ++p) {
          CHECK(sign_of_block(length, g, p) ==
                parity_of_type(CycleType({{length * g, p}})));
        }
      }
    }
  }
}

TEST_CASE("solution enumeration order and contents") {
  RootDivisorSet set12 = root_divisors(2, 1);  // members {1, 2}
  auto sols = enumerate_solutions(set12, 2);
  REQUIRE(sols.size() == 2);
  using Assignment = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  CHECK(sols[0].assignment == Assignment{{1, 2}, {2, 0}});
  CHECK(sols[1].assignment == Assignment{{1, 0}, {2, 1}});

  CHECK(enumerate_solutions(root_divisors(2, 2), 3).empty());  // members {2}

  // Independent brute scan over the stated box for G_8(1) = {1,2,4,8}, c=4.
  std::uint64_t expected = 0;
  for (std::uint64_t p1 = 0; p1 <= 4; ++p1)
    for (std::uint64_t p2 = 0; p2 <= 2; ++p2)
      for (std::uint64_t p4 = 0; p4 <= 1; ++p4)
        if (p1 + 2 * p2 + 4 * p4 == 4) ++expected;
  CHECK(expected == 4);
  auto sols8 = enumerate_solutions(root_divisors(8, 1), 4);
  CHECK(sols8.size() == expected);
  for (const SolutionVector& sol : sols8) {
    std::uint64_t sum = 0;
    for (const auto& [g, p] : sol.assignment) {
      sum += g * p;
    }
    CHECK(sum == 4);
  }
}

TEST_CASE("solution existence") {
  CHECK(has_solution(root_divisors(2, 1), 5));
  CHECK_FALSE(has_solution(root_divisors(2, 2), 3));
  CHECK(has_solution(root_divisors(2, 2), 0));
  CHECK(has_solution(root_divisors(12, 2), 4));   // members {2, 4, 6, 12}
  CHECK_FALSE(has_solution(root_divisors(12, 2), 3));
}

TEST_CASE("single length counts") {
  RootCount a = single_length_counts(2, 1, 4);
  CHECK(a.total == 10);
  CHECK(a.even == 4);
  CHECK(a.odd == 6);

  RootCount b = single_length_counts(2, 2, 2);
  CHECK(b.total == 2);
  CHECK(b.even == 0);
  CHECK(b.odd == 2);

  RootCount c = single_length_counts(3, 3, 1);
  CHECK(c.total == 0);

  RootCount d = single_length_counts(8, 1, 4);
  CHECK(d.total == 16);
  CHECK(d.even == 4);
  CHECK(d.odd == 12);

  RootCount empty = single_length_counts(5, 9, 0);
  CHECK(empty.total == 1);
  CHECK(empty.even == 1);
}

TEST_CASE("count_roots over full cycle types") {
  CHECK(count_roots(2, parse_cycle_type("1^2,2^1")).total == 0);

  RootCount rc = count_roots(2, parse_cycle_type("1^4"));
  CHECK(rc == RootCount{10, 4, 6});

  RootCount empty = count_roots(3, CycleType{});
  CHECK(empty == RootCount{1, 1, 0});
}

TEST_CASE("even plus odd equals total") {
  for (std::uint64_t k = 1; k <= 8; ++k) {
    for (std::uint64_t n = 0; n <= 9; ++n) {
      for (const CycleType& type : partitions_of(n)) {
        RootCount rc = count_roots(k, type);
        CHECK(rc.even + rc.odd == rc.total);
        CHECK(rc.even >= 0);
        CHECK(rc.odd >= 0);
      }
    }
  }
}

TEST_CASE("odd k sends every root to the permutation's parity") {
  for (std::uint64_t k : {3ull, 5ull, 7ull}) {
    for (std::uint64_t n = 0; n <= 10; ++n) {
      for (const CycleType& type : partitions_of(n)) {
        RootCount rc = count_roots(k, type);
        if (parity_of_type(type) > 0) {
          CHECK(rc.even == rc.total);
          CHECK(rc.odd == 0);
        } else {
          CHECK(rc.odd == rc.total);
          CHECK(rc.even == 0);
        }
      }
    }
  }
}

TEST_CASE("existence test matches the counts") {
  CHECK_FALSE(has_kth_root(2, parse_cycle_type("2^1")));
  CHECK(has_kth_root(2, parse_cycle_type("2^2")));
  CHECK(has_kth_root(9, parse_cycle_type("1^5")));
  for (std::uint64_t k = 1; k <= 8; ++k) {
    for (std::uint64_t n = 0; n <= 12; ++n) {
      for (const CycleType& type : partitions_of(n)) {
        CHECK(has_kth_root(k, type) == (count_roots(k, type).total > 0));
      }
    }
  }
}

TEST_CASE("closed form agrees with the oracle at small sizes") {
  for (std::uint64_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 0; n <= 5; ++n) {
      for (const CycleType& type : partitions_of(n)) {
        CHECK(count_roots(k, type) == oracle_count_roots(k, type));
      }
    }
  }
}

TEST_CASE("closed form agrees with the series for n <= 12, k <= 8") {
  for (std::uint64_t k = 1; k <= 8; ++k) {
    EgfSeries total = build_total_root_series(k, 12);
    EgfSeries diff = build_signed_difference_series(k, 12);
    for (std::uint64_t n = 0; n <= 12; ++n) {
      for (const CycleType& type : partitions_of(n)) {
        RootCount rc = count_roots(k, type);
        CHECK(Rational(rc.total) == egf_coefficient(total, type));
        CHECK(Rational(rc.difference()) == egf_coefficient(diff, type));
      }
    }
  }
}
