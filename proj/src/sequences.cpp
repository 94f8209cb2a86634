#include "permroots/sequences.hpp"

#include <stdexcept>

#include "permroots/counting.hpp"
#include "permroots/root_divisors.hpp"

namespace permroots {
namespace {

// Univariate series live in t_1, whose weight equals its exponent, so the
// series truncation is the degree bound.
EgfSeries univariate_term_sum(std::uint64_t length,
                              const std::vector<std::uint64_t>& gs, bool with_sign,
                              std::uint64_t max_degree) {
  EgfSeries sum(max_degree);
  for (std::uint64_t g : gs) {
    if (g > max_degree) {
      continue;
    }
    Rational coeff = make_rational(int_pow(BigInt(length), g - 1), BigInt(g));
    if (with_sign && (length * g + 1) % 2 != 0) {
      coeff = -coeff;
    }
    sum.add_term(Monomial::variable(1, static_cast<std::uint32_t>(g)), coeff);
  }
  return sum;
}

EgfSeries half_sum(const EgfSeries& plus, const EgfSeries& minus, Parity parity) {
  if (parity == Parity::kEven) {
    return (plus + minus) * make_rational(1, 2);
  }
  return (plus - minus) * make_rational(1, 2);
}

// Drops every t^c term whose cycle-type parity disagrees with the requested
// one; used for odd k, where all roots share the permutation's parity.
EgfSeries keep_parity_terms(const EgfSeries& series, std::uint64_t length,
                            Parity parity) {
  EgfSeries out(series.truncation());
  for (const auto& [m, coeff] : series.terms()) {
    std::uint64_t c = m.is_constant() ? 0 : m.exponents().front().second;
    int sign = (c * (length + 1)) % 2 == 0 ? 1 : -1;
    if ((sign > 0) == (parity == Parity::kEven)) {
      out.add_term(m, coeff);
    }
  }
  return out;
}

}  // namespace

const std::vector<SequenceSpec>& supported_sequences() {
  static const std::vector<SequenceSpec> kTable = {
      {"A000704", 2, 1, Parity::kEven, 0},  {"A001465", 2, 1, Parity::kOdd, 0},
      {"A061129", 4, 1, Parity::kEven, 0},  {"A061136", 4, 1, Parity::kOdd, 0},
      {"A061130", 6, 1, Parity::kEven, 0},  {"A061137", 6, 1, Parity::kOdd, 0},
      {"A061131", 8, 1, Parity::kEven, 0},  {"A061132", 10, 1, Parity::kEven, 0},
  };
  return kTable;
}

const SequenceSpec* find_sequence(std::string_view id) {
  for (const SequenceSpec& spec : supported_sequences()) {
    if (spec.id == id) {
      return &spec;
    }
  }
  return nullptr;
}

EgfSeries single_length_egf(std::uint64_t k, std::uint64_t length, Parity parity,
                            std::uint64_t max_degree) {
  if (k == 0 || length == 0) {
    throw std::invalid_argument("single_length_egf: k and length must be >= 1");
  }
  const std::vector<std::uint64_t>& gs = root_divisors(k, length).members;
  EgfSeries plus = series_exp(univariate_term_sum(length, gs, false, max_degree));
  EgfSeries minus = series_exp(univariate_term_sum(length, gs, true, max_degree));
  return half_sum(plus, minus, parity);
}

EgfSeries single_length_egf_simplified(std::uint64_t k, std::uint64_t length,
                                       Parity parity, std::uint64_t max_degree) {
  if (k == 0 || length == 0) {
    throw std::invalid_argument(
        "single_length_egf_simplified: k and length must be >= 1");
  }

  if (k % 2 != 0) {
    EgfSeries total =
        series_exp(univariate_term_sum(length, root_divisors(k, length).members,
                                       false, max_degree));
    return keep_parity_terms(total, length, parity);
  }

  if (length % 2 == 0) {
    // Even k, even length: every root divisor is even, so the signed
    // exponential is exp(-A) and the split collapses to cosh/sinh.
    EgfSeries arg = univariate_term_sum(length, root_divisors(k, length).members,
                                        false, max_degree);
    return parity == Parity::kEven ? series_cosh(arg) : series_sinh(arg);
  }

  // Even k, odd length: exp over the odd divisors times cosh/sinh over the
  // even ones. At length 1 the divisor set is exactly the divisors of k,
  // expanded as consecutive powers of two when k is one.
  std::vector<std::uint64_t> odd_gs, even_gs;
  if (length == 1 && (k & (k - 1)) == 0) {
    odd_gs.push_back(1);
    for (std::uint64_t g = 2; g <= k; g *= 2) {
      even_gs.push_back(g);
    }
  } else if (length == 1) {
    for (std::uint64_t d : divisors_of(k)) {
      (d % 2 == 0 ? even_gs : odd_gs).push_back(d);
    }
  } else {
    RootDivisorSet set = root_divisors(k, length);
    odd_gs = set.odd_members;
    even_gs = set.even_members;
  }
  EgfSeries odd_part =
      series_exp(univariate_term_sum(length, odd_gs, false, max_degree));
  EgfSeries even_arg = univariate_term_sum(length, even_gs, false, max_degree);
  EgfSeries hyper =
      parity == Parity::kEven ? series_cosh(even_arg) : series_sinh(even_arg);
  return odd_part * hyper;
}

EgfSeries square_root_egf(Parity parity, std::uint64_t max_weight) {
  EgfSeries odd_product = EgfSeries::constant(Rational(1), max_weight);
  for (std::uint64_t length = 1; length <= max_weight; length += 2) {
    odd_product = odd_product * series_exp(EgfSeries::variable(
                                    static_cast<std::uint32_t>(length), max_weight));
  }

  EgfSeries hyper_arg(max_weight);
  for (std::uint64_t j = 1; 2 * (2 * j - 1) <= max_weight; ++j) {
    // (2j-1)/2 * t_{2j-1}^2
    hyper_arg.add_term(Monomial::variable(static_cast<std::uint32_t>(2 * j - 1), 2),
                       make_rational(BigInt(2 * j - 1), 2));
  }
  for (std::uint64_t j = 1; 4 * j <= max_weight; ++j) {
    // j * t_{2j}^2
    hyper_arg.add_term(Monomial::variable(static_cast<std::uint32_t>(2 * j), 2),
                       Rational(BigInt(j)));
  }
  EgfSeries hyper =
      parity == Parity::kEven ? series_cosh(hyper_arg) : series_sinh(hyper_arg);
  return odd_product * hyper;
}

std::vector<BigInt> identity_root_sequence(std::uint64_t k, Parity parity,
                                           std::uint64_t terms) {
  if (terms == 0) {
    throw std::invalid_argument("identity_root_sequence: need at least one term");
  }
  EgfSeries egf = single_length_egf(k, 1, parity, terms - 1);
  std::vector<BigInt> out;
  out.reserve(terms);
  for (std::uint64_t c = 0; c < terms; ++c) {
    CycleType type = c == 0 ? CycleType{} : CycleType({{1, c}});
    BigInt value = to_integer(egf_coefficient(egf, type));
    if (value < 0) {
      throw std::logic_error("identity_root_sequence: negative term");
    }
    out.push_back(std::move(value));
  }
  return out;
}

std::vector<BigInt> generate_sequence(const SequenceSpec& spec, std::uint64_t terms) {
  return identity_root_sequence(spec.k, spec.parity, terms);
}

std::vector<BigInt> sequence_by_id(const std::string& id, std::uint64_t terms) {
  const SequenceSpec* spec = find_sequence(id);
  if (spec == nullptr) {
    std::string supported;
    for (const SequenceSpec& s : supported_sequences()) {
      if (!supported.empty()) {
        supported += ", ";
      }
      supported += s.id;
    }
    throw std::invalid_argument("unsupported sequence id \"" + id +
                                "\"; supported: " + supported);
  }
  return generate_sequence(*spec, terms);
}

std::string to_b_file(const std::vector<BigInt>& terms, std::uint64_t offset) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += std::to_string(offset + i);
    out += ' ';
    out += terms[i].str();
    out += '\n';
  }
  return out;
}

}  // namespace permroots
