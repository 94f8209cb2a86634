#pragma once

#include <cstdint>
#include <vector>

#include "permroots/counting.hpp"
#include "permroots/cycle_type.hpp"

namespace permroots {

/// Permutation of {1..n} in one-line notation, stored 0-based.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that the word is a bijection on {0..n-1}.
  explicit Permutation(std::vector<std::uint32_t> word);

  static Permutation identity(std::uint32_t n);

  std::uint32_t size() const { return static_cast<std::uint32_t>(word_.size()); }
  std::uint32_t image(std::uint32_t i) const { return word_[i]; }
  const std::vector<std::uint32_t>& word() const { return word_; }

  bool operator==(const Permutation& other) const { return word_ == other.word_; }

 private:
  std::vector<std::uint32_t> word_;
};

/// Permutation enumeration is capped here; n! explodes past it.
inline constexpr std::uint32_t kMaxOracleSize = 10;

/// All n! permutations in lexicographic one-line order. Throws above the cap.
std::vector<Permutation> all_permutations(std::uint32_t n);

/// p^k, computed cycle-wise: every element moves k steps along its own cycle.
Permutation power(const Permutation& p, std::uint64_t k);

CycleType cycle_type_of(const Permutation& p);

/// (-1)^(n - #cycles), fixed points included.
int parity_of(const Permutation& p);

/// The representative with cycles laid out on consecutive integers, lengths
/// ascending: e.g. type 2^1,3^1 is (1 2)(3 4 5).
Permutation canonical_of_type(const CycleType& type);

/// Exhaustive count of the k-th roots of sigma, split by parity.
RootCount oracle_count_roots_of(const Permutation& sigma, std::uint64_t k);

/// Exhaustive count for the canonical permutation of the given type.
/// Throws when the type's size exceeds the cap.
RootCount oracle_count_roots(std::uint64_t k, const CycleType& type);

}  // namespace permroots
