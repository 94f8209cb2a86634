#include "permroots/cycle_type.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace permroots {
namespace {

[[noreturn]] void parse_error(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("cycle type syntax error at position " +
                              std::to_string(pos) + ": " + what);
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() const { return pos >= text.size(); }

  std::uint64_t read_integer(const char* role) {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      parse_error(pos, std::string("expected ") + role);
    }
    std::uint64_t value = 0;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (value > (kMax - digit) / 10) {
        parse_error(pos, std::string(role) + " too large");
      }
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }
};

}  // namespace

CycleType::CycleType(Parts parts) : parts_(std::move(parts)) {
  for (const auto& [length, mult] : parts_) {
    if (length == 0) {
      throw std::invalid_argument("cycle type: zero cycle length");
    }
    if (mult == 0) {
      throw std::invalid_argument("cycle type: zero multiplicity stored");
    }
    n_ += length * mult;
  }
}

std::uint64_t CycleType::multiplicity(std::uint64_t length) const {
  auto it = parts_.find(length);
  return it == parts_.end() ? 0 : it->second;
}

CycleType parse_cycle_type(const std::string& text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.at_end()) {
    return CycleType{};
  }

  CycleType::Parts parts;
  while (true) {
    std::size_t term_pos = cur.pos;
    std::uint64_t length = cur.read_integer("cycle length");
    if (length == 0) {
      parse_error(term_pos, "cycle length must be >= 1");
    }
    std::uint64_t mult = 1;
    cur.skip_ws();
    if (!cur.at_end() && cur.text[cur.pos] == '^') {
      ++cur.pos;
      std::size_t mult_pos = cur.pos;
      mult = cur.read_integer("multiplicity");
      if (mult == 0) {
        parse_error(mult_pos, "multiplicity must be >= 1");
      }
    }
    if (!parts.emplace(length, mult).second) {
      parse_error(term_pos, "duplicate cycle length " + std::to_string(length));
    }
    cur.skip_ws();
    if (cur.at_end()) {
      break;
    }
    if (cur.text[cur.pos] != ',') {
      parse_error(cur.pos, "expected ','");
    }
    ++cur.pos;
  }
  return CycleType(std::move(parts));
}

std::string format_cycle_type(const CycleType& type) {
  std::string out;
  for (const auto& [length, mult] : type.parts()) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(length);
    out += '^';
    out += std::to_string(mult);
  }
  return out;
}

namespace {

void fill_partitions(std::uint64_t remaining, std::uint64_t min_length,
                     CycleType::Parts& acc, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (min_length > remaining) {
    return;
  }
  // Largest multiplicity of min_length first gives descending lex on
  // (c_1, ..., c_n).
  for (std::uint64_t mult = remaining / min_length;; --mult) {
    if (mult > 0) {
      acc[min_length] = mult;
      fill_partitions(remaining - min_length * mult, min_length + 1, acc, out);
      acc.erase(min_length);
    } else {
      fill_partitions(remaining, min_length + 1, acc, out);
    }
    if (mult == 0) {
      break;
    }
  }
}

}  // namespace

std::vector<CycleType> partitions_of(std::uint64_t n) {
  std::vector<CycleType> out;
  CycleType::Parts acc;
  fill_partitions(n, 1, acc, out);
  return out;
}

int parity_of_type(const CycleType& type) {
  // A q-cycle has sign (-1)^(q+1); the product over all cycles is
  // (-1)^(n - #cycles).
  std::uint64_t cycles = 0;
  for (const auto& [length, mult] : type.parts()) {
    (void)length;
    cycles += mult;
  }
  return (type.size() - cycles) % 2 == 0 ? 1 : -1;
}

}  // namespace permroots
