#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace permroots {

/// Cycle type of a permutation: cycle length -> multiplicity.
///
/// Only positive multiplicities are stored; the empty map is the type of the
/// (unique) permutation of the empty set. The total size n = sum of
/// length * multiplicity is cached at construction.
class CycleType {
 public:
  using Parts = std::map<std::uint64_t, std::uint64_t>;

  CycleType() = default;

  /// Validates that every length and multiplicity is >= 1.
  explicit CycleType(Parts parts);

  const Parts& parts() const { return parts_; }
  std::uint64_t size() const { return n_; }
  bool empty() const { return parts_.empty(); }

  /// Multiplicity of the given cycle length (0 if absent).
  std::uint64_t multiplicity(std::uint64_t length) const;

  bool operator==(const CycleType& other) const { return parts_ == other.parts_; }

 private:
  Parts parts_;
  std::uint64_t n_ = 0;
};

/// Parses the cycle-type grammar `term ("," term)*`, term = `<len>` or
/// `<len>^<mult>`. Whitespace around tokens is ignored; empty text denotes the
/// empty type. Throws std::invalid_argument with the offending position on
/// syntax errors, duplicate lengths, or zero lengths/multiplicities.
CycleType parse_cycle_type(const std::string& text);

/// Canonical text: lengths ascending, every multiplicity explicit (`l^c`),
/// terms comma-separated. The empty type formats as "".
std::string format_cycle_type(const CycleType& type);

/// All cycle types of total size n, each exactly once, in descending
/// lexicographic order of the multiplicity vector (c_1, ..., c_n); {1 -> n}
/// comes first, {n -> 1} last.
std::vector<CycleType> partitions_of(std::uint64_t n);

/// +1 if permutations of this type are even, -1 if odd.
int parity_of_type(const CycleType& type);

}  // namespace permroots
