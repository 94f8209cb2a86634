#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permroots/cycle_type.hpp"
#include "permroots/numbers.hpp"
#include "permroots/root_divisors.hpp"

namespace permroots {

/// Number of k-th roots of a permutation, split by parity.
struct RootCount {
  BigInt total = 0;
  BigInt even = 0;
  BigInt odd = 0;

  /// even - odd (may be negative).
  BigInt difference() const { return even - odd; }

  bool operator==(const RootCount& other) const {
    return total == other.total && even == other.even && odd == other.odd;
  }
};

/// One non-negative assignment g -> p_g over a root divisor set with
/// sum g * p_g equal to the queried multiplicity. Every member of the set is
/// present, zero values included, keyed ascending by g.
struct SolutionVector {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> assignment;
};

/// Number of permutations of cycle type (g*length)^p that are k-th roots of a
/// permutation of cycle type (length)^(g*p):
/// (g*p)! * length^{p*(g-1)} / (g^p * p!) when g is a root divisor of
/// (k, length), and 0 otherwise. The division is exact.
BigInt root_multiplicity(std::uint64_t k, std::uint64_t length, std::uint64_t g,
                         std::uint64_t p);

/// +1 iff p cycles of length (length * g) form an even permutation:
/// (-1)^{p * (length * g + 1)}.
int sign_of_block(std::uint64_t length, std::uint64_t g, std::uint64_t p);

/// Every assignment with sum g * p_g = c, exactly once, in ascending
/// lexicographic order of the coordinates read in descending-g order.
std::vector<SolutionVector> enumerate_solutions(const RootDivisorSet& set,
                                                std::uint64_t c);

/// Whether sum g * x_g = c has a non-negative solution over the set's members.
bool has_solution(const RootDivisorSet& set, std::uint64_t c);

/// Root counts for a permutation whose cycles all have one length:
/// total = c! * sum over solutions of prod_g length^{(g-1)p_g} / (g^{p_g} p_g!),
/// and the even/odd split recovered from the signed analogue carrying
/// prod_g (-1)^{p_g(length*g+1)}. All divisions are exact (checked at runtime).
RootCount single_length_counts(std::uint64_t k, std::uint64_t length, std::uint64_t c);

/// Root counts for an arbitrary cycle type: the total and the even-odd
/// difference both multiply across distinct cycle lengths.
RootCount count_roots(std::uint64_t k, const CycleType& type);

/// True iff a permutation of the given type has at least one k-th root.
bool has_kth_root(std::uint64_t k, const CycleType& type);

}  // namespace permroots
