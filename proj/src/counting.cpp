#include "permroots/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace permroots {
namespace {

void check_positive(std::uint64_t k, std::uint64_t length) {
  if (k == 0 || length == 0) {
    throw std::invalid_argument("counting: k and length must be >= 1");
  }
}

bool is_member(const RootDivisorSet& set, std::uint64_t g) {
  return std::binary_search(set.members.begin(), set.members.end(), g);
}

// even = (total + difference) / 2, odd = (total - difference) / 2; both
// divisions must be exact and non-negative.
RootCount split_by_difference(BigInt total, const BigInt& difference) {
  RootCount out;
  out.even = exact_div(total + difference, 2);
  out.odd = exact_div(total - difference, 2);
  out.total = std::move(total);
  if (out.even < 0 || out.odd < 0) {
    throw std::logic_error("root count: negative even/odd split");
  }
  return out;
}

}  // namespace

BigInt root_multiplicity(std::uint64_t k, std::uint64_t length, std::uint64_t g,
                         std::uint64_t p) {
  check_positive(k, length);
  if (g == 0) {
    throw std::invalid_argument("root_multiplicity: g must be >= 1");
  }
  if (!is_member(root_divisors(k, length), g)) {
    return 0;
  }
  BigInt num = factorial(g * p) * int_pow(BigInt(length), p * (g - 1));
  BigInt den = int_pow(BigInt(g), p) * factorial(p);
  return exact_div(num, den);
}

int sign_of_block(std::uint64_t length, std::uint64_t g, std::uint64_t p) {
  return (p % 2 == 0 || (length * g + 1) % 2 == 0) ? 1 : -1;
}

std::vector<SolutionVector> enumerate_solutions(const RootDivisorSet& set,
                                                std::uint64_t c) {
  std::vector<std::uint64_t> descending(set.members.rbegin(), set.members.rend());
  std::vector<SolutionVector> out;
  std::vector<std::uint64_t> picks(descending.size(), 0);

  auto emit = [&] {
    SolutionVector sol;
    sol.assignment.reserve(descending.size());
    for (std::size_t i = descending.size(); i-- > 0;) {
      sol.assignment.emplace_back(descending[i], picks[i]);
    }
    out.push_back(std::move(sol));
  };

  // p for the largest g runs 0, 1, ... first, which is ascending lex in
  // descending-g coordinates.
  auto dfs = [&](auto&& self, std::size_t index, std::uint64_t remaining) -> void {
    if (index == descending.size()) {
      if (remaining == 0) {
        emit();
      }
      return;
    }
    std::uint64_t g = descending[index];
    for (std::uint64_t p = 0; p * g <= remaining; ++p) {
      picks[index] = p;
      self(self, index + 1, remaining - p * g);
    }
    picks[index] = 0;
  };
  dfs(dfs, 0, c);
  return out;
}

bool has_solution(const RootDivisorSet& set, std::uint64_t c) {
  if (c == 0) {
    return true;
  }
  if (set.members.empty()) {
    return false;
  }
  if (set.members.front() == 1) {
    return true;
  }
  std::vector<char> reachable(c + 1, 0);
  reachable[0] = 1;
  for (std::uint64_t g : set.members) {
    for (std::uint64_t s = g; s <= c; ++s) {
      if (reachable[s - g]) {
        reachable[s] = 1;
      }
    }
    if (reachable[c]) {
      return true;
    }
  }
  return false;
}

RootCount single_length_counts(std::uint64_t k, std::uint64_t length, std::uint64_t c) {
  check_positive(k, length);
  RootDivisorSet set = root_divisors(k, length);
  BigInt c_factorial = factorial(c);
  BigInt total = 0;
  BigInt difference = 0;
  for (const SolutionVector& sol : enumerate_solutions(set, c)) {
    BigInt num = c_factorial;
    BigInt den = 1;
    int sign = 1;
    for (const auto& [g, p] : sol.assignment) {
      num *= int_pow(BigInt(length), p * (g - 1));
      den *= int_pow(BigInt(g), p) * factorial(p);
      sign *= sign_of_block(length, g, p);
    }
    BigInt term = exact_div(num, den);
    total += term;
    difference += sign > 0 ? term : -term;
  }
  return split_by_difference(std::move(total), difference);
}

RootCount count_roots(std::uint64_t k, const CycleType& type) {
  if (k == 0) {
    throw std::invalid_argument("count_roots: k must be >= 1");
  }
  BigInt total = 1;
  BigInt difference = 1;
  for (const auto& [length, mult] : type.parts()) {
    RootCount single = single_length_counts(k, length, mult);
    total *= single.total;
    difference *= single.difference();
  }
  return split_by_difference(std::move(total), difference);
}

bool has_kth_root(std::uint64_t k, const CycleType& type) {
  if (k == 0) {
    throw std::invalid_argument("has_kth_root: k must be >= 1");
  }
  for (const auto& [length, mult] : type.parts()) {
    if (!has_solution(root_divisors(k, length), mult)) {
      return false;
    }
  }
  return true;
}

}  // namespace permroots
