#include "permroots/root_divisors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace permroots {
namespace {

void check_args(std::uint64_t k, std::uint64_t length) {
  if (k == 0 || length == 0) {
    throw std::invalid_argument("root divisors: k and length must be >= 1");
  }
}

RootDivisorSet with_parity_split(std::uint64_t k, std::uint64_t length,
                                 std::vector<std::uint64_t> members) {
  RootDivisorSet set;
  set.k = k;
  set.length = length;
  set.members = std::move(members);
  for (std::uint64_t g : set.members) {
    (g % 2 == 0 ? set.even_members : set.odd_members).push_back(g);
  }
  return set;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_factorization(std::uint64_t k) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      std::uint64_t a = 0;
      while (k % p == 0) {
        k /= p;
        ++a;
      }
      factors.emplace_back(p, a);
    }
  }
  if (k > 1) {
    factors.emplace_back(k, 1);
  }
  return factors;
}

}  // namespace

RootDivisorSet root_divisors(std::uint64_t k, std::uint64_t length) {
  check_args(k, length);
  std::vector<std::uint64_t> members;
  for (std::uint64_t g = 1; g <= k; ++g) {
    if (std::gcd(g * length, k) == g) {
      members.push_back(g);
    }
  }
  return with_parity_split(k, length, std::move(members));
}

RootDivisorSet root_divisors_by_factorization(std::uint64_t k, std::uint64_t length) {
  check_args(k, length);
  std::vector<std::uint64_t> members{1};
  for (const auto& [p, a] : prime_factorization(k)) {
    std::vector<std::uint64_t> next;
    if (length % p == 0) {
      std::uint64_t pa = 1;
      for (std::uint64_t i = 0; i < a; ++i) pa *= p;
      for (std::uint64_t m : members) next.push_back(m * pa);
    } else {
      for (std::uint64_t m : members) {
        std::uint64_t pb = 1;
        for (std::uint64_t b = 0; b <= a; ++b) {
          next.push_back(m * pb);
          if (b < a) pb *= p;
        }
      }
    }
    members = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return with_parity_split(k, length, std::move(members));
}

std::vector<std::uint64_t> divisors_of(std::uint64_t k) {
  if (k == 0) {
    throw std::invalid_argument("divisors_of: k must be >= 1");
  }
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      small.push_back(d);
      if (d != k / d) {
        large.push_back(k / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace permroots
