#pragma once

#include <cstdint>
#include <vector>

namespace permroots {

/// The set of g with gcd(g * length, k) = g: exactly the factors g such that a
/// (g * length)-cycle raised to the k-th power splits into g cycles of the
/// given length. Every member divides k.
struct RootDivisorSet {
  std::uint64_t k = 1;
  std::uint64_t length = 1;
  std::vector<std::uint64_t> members;       // ascending
  std::vector<std::uint64_t> odd_members;   // ascending
  std::vector<std::uint64_t> even_members;  // ascending
};

/// Builds the set by scanning g = 1..k against the gcd condition. The runtime
/// default; k is small in practice.
RootDivisorSet root_divisors(std::uint64_t k, std::uint64_t length);

/// Builds the same set from the prime factorization of k: with
/// k = p_1^a_1 ... p_j^a_j, members are the products p_1^b_1 ... p_j^b_j where
/// b_i = a_i when p_i divides the length and 0 <= b_i <= a_i otherwise.
RootDivisorSet root_divisors_by_factorization(std::uint64_t k, std::uint64_t length);

/// Divisors of k, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t k);

}  // namespace permroots
