#include "permroots/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permroots {
namespace {

void check_cap(std::uint64_t n, const char* where) {
  if (n > kMaxOracleSize) {
    throw std::invalid_argument(std::string(where) + ": size " + std::to_string(n) +
                                " exceeds the oracle cap of " +
                                std::to_string(kMaxOracleSize));
  }
}

// out[i] = i moved k steps along its cycle in w.
void power_into(const std::vector<std::uint32_t>& w, std::uint64_t k,
                std::vector<std::uint32_t>& out, std::vector<char>& seen,
                std::vector<std::uint32_t>& cycle) {
  std::fill(seen.begin(), seen.end(), 0);
  for (std::uint32_t start = 0; start < w.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    cycle.clear();
    std::uint32_t x = start;
    do {
      seen[x] = 1;
      cycle.push_back(x);
      x = w[x];
    } while (x != start);
    std::uint64_t len = cycle.size();
    std::uint64_t shift = k % len;
    for (std::uint64_t j = 0; j < len; ++j) {
      out[cycle[j]] = cycle[(j + shift) % len];
    }
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size(), 0);
  for (std::uint32_t v : word_) {
    if (v >= word_.size() || seen[v]) {
      throw std::invalid_argument("permutation word is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> word(n);
  std::iota(word.begin(), word.end(), 0);
  return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(std::uint32_t n) {
  check_cap(n, "all_permutations");
  std::vector<Permutation> out;
  std::vector<std::uint32_t> word(n);
  std::iota(word.begin(), word.end(), 0);
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Permutation power(const Permutation& p, std::uint64_t k) {
  std::vector<std::uint32_t> out(p.size());
  std::vector<char> seen(p.size());
  std::vector<std::uint32_t> cycle;
  power_into(p.word(), k, out, seen, cycle);
  return Permutation(std::move(out));
}

CycleType cycle_type_of(const Permutation& p) {
  CycleType::Parts parts;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    std::uint64_t len = 0;
    std::uint32_t x = start;
    do {
      seen[x] = 1;
      ++len;
      x = p.image(x);
    } while (x != start);
    ++parts[len];
  }
  return CycleType(std::move(parts));
}

int parity_of(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::uint32_t cycles = 0;
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    ++cycles;
    std::uint32_t x = start;
    do {
      seen[x] = 1;
      x = p.image(x);
    } while (x != start);
  }
  return (p.size() - cycles) % 2 == 0 ? 1 : -1;
}

Permutation canonical_of_type(const CycleType& type) {
  std::vector<std::uint32_t> word(type.size());
  std::uint32_t next = 0;
  for (const auto& [length, mult] : type.parts()) {
    for (std::uint64_t i = 0; i < mult; ++i) {
      for (std::uint64_t j = 0; j + 1 < length; ++j) {
        word[next + j] = next + static_cast<std::uint32_t>(j) + 1;
      }
      word[next + length - 1] = next;
      next += static_cast<std::uint32_t>(length);
    }
  }
  return Permutation(std::move(word));
}

RootCount oracle_count_roots_of(const Permutation& sigma, std::uint64_t k) {
  check_cap(sigma.size(), "oracle_count_roots");
  if (k == 0) {
    throw std::invalid_argument("oracle_count_roots: k must be >= 1");
  }
  std::uint32_t n = sigma.size();
  std::vector<std::uint32_t> tau(n), tau_k(n), cycle;
  std::vector<char> seen(n);
  std::iota(tau.begin(), tau.end(), 0);
  std::uint64_t even = 0, odd = 0;
  do {
    power_into(tau, k, tau_k, seen, cycle);
    if (tau_k == sigma.word()) {
      // Parity of tau from its cycle count.
      std::fill(seen.begin(), seen.end(), 0);
      std::uint32_t cycles = 0;
      for (std::uint32_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++cycles;
        std::uint32_t x = start;
        do {
          seen[x] = 1;
          x = tau[x];
        } while (x != start);
      }
      ((n - cycles) % 2 == 0 ? even : odd) += 1;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  RootCount out;
  out.total = even + odd;
  out.even = even;
  out.odd = odd;
  return out;
}

RootCount oracle_count_roots(std::uint64_t k, const CycleType& type) {
  check_cap(type.size(), "oracle_count_roots");
  return oracle_count_roots_of(canonical_of_type(type), k);
}

}  // namespace permroots
