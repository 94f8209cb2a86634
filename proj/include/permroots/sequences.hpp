#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permroots/numbers.hpp"
#include "permroots/series.hpp"

namespace permroots {

enum class Parity { kEven, kOdd };

/// One supported OEIS sequence: even or odd k-th roots of the identity
/// permutation, indexed from `offset`.
struct SequenceSpec {
  std::string id;
  std::uint64_t k;
  std::uint64_t length;  // 1 for all supported sequences
  Parity parity;
  std::uint64_t offset;  // index of the first term
};

/// The eight supported sequences.
const std::vector<SequenceSpec>& supported_sequences();

/// Lookup by OEIS id; nullptr when unsupported.
const SequenceSpec* find_sequence(std::string_view id);

/// EGF (univariate, in t_1) for the number of even or odd k-th roots of a
/// permutation with c cycles of one fixed length, as the half-sum/half-
/// difference of the unsigned and signed exponentials. Truncated at degree
/// max_degree (the degree of t counts the cycle multiplicity c).
EgfSeries single_length_egf(std::uint64_t k, std::uint64_t length, Parity parity,
                            std::uint64_t max_degree);

/// The structurally simplified form of the same series, built literally from
/// exp/cosh/sinh: for even k, cosh/sinh over the whole divisor set when the
/// length is even, and exp over the odd divisors times cosh/sinh over the even
/// ones when the length is odd (with the length-1 divisor sums taken over the
/// divisors of k, and powers of two expanded directly when k is one). For odd
/// k every root has the permutation's parity, so the series is the unsigned
/// exponential with the opposite-parity coefficients removed.
EgfSeries single_length_egf_simplified(std::uint64_t k, std::uint64_t length,
                                       Parity parity, std::uint64_t max_degree);

/// Multivariate EGF for even (resp. odd) square roots: the product of
/// exp(t_l) over odd l times cosh (resp. sinh) of
/// sum_j ((2j-1)/2 * t_{2j-1}^2 + j * t_{2j}^2), truncated at max_weight.
EgfSeries square_root_egf(Parity parity, std::uint64_t max_weight);

/// Terms 0..terms-1 of the even/odd k-th-root count of the identity
/// permutation: term c = c! times the t^c coefficient of the single-length
/// EGF at length 1.
std::vector<BigInt> identity_root_sequence(std::uint64_t k, Parity parity,
                                           std::uint64_t terms);

/// identity_root_sequence for a supported spec.
std::vector<BigInt> generate_sequence(const SequenceSpec& spec, std::uint64_t terms);

/// Lookup + generate; throws std::invalid_argument on an unsupported id.
std::vector<BigInt> sequence_by_id(const std::string& id, std::uint64_t terms);

/// OEIS b-file rendering: one `<index> <value>` line per term.
std::string to_b_file(const std::vector<BigInt>& terms, std::uint64_t offset);

}  // namespace permroots
