#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permroots/cycle_type.hpp"
#include "permroots/numbers.hpp"

namespace permroots {

/// Product of variables t_l^e with sparse exponents. Variable t_l carries
/// weight l, so the weight of a monomial is sum(l * e_l) — the permutation
/// size it indexes.
class Monomial {
 public:
  using Exponents = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

  Monomial() = default;

  /// t_index^exponent; exponent 0 gives the constant monomial.
  static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);

  /// prod t_l^{c_l} over the parts of the type.
  static Monomial from_cycle_type(const CycleType& type);

  const Exponents& exponents() const { return exponents_; }
  std::uint64_t weight() const { return weight_; }
  bool is_constant() const { return exponents_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }

 private:
  Exponents exponents_;  // sorted by variable index, no zero exponents
  std::uint64_t weight_ = 0;
};

/// Graded order: by weight, then lexicographically with t_1 > t_2 > ...
/// (so within one weight, t_1^2 precedes t_2).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Truncated multivariate power series with exact rational coefficients.
/// Monomials of weight above the truncation bound are discarded; arithmetic
/// between series of different truncations keeps the minimum.
class EgfSeries {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexLess>;

  explicit EgfSeries(std::uint64_t truncation) : truncation_(truncation) {}

  static EgfSeries constant(const Rational& value, std::uint64_t truncation);
  static EgfSeries variable(std::uint32_t index, std::uint64_t truncation);

  std::uint64_t truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Raw coefficient of the monomial (0 if absent).
  Rational coefficient(const Monomial& m) const;

  /// Adds value * m, dropping the term if its weight exceeds the truncation
  /// or the resulting coefficient is zero.
  void add_term(const Monomial& m, const Rational& value);

  EgfSeries operator-() const;
  EgfSeries operator+(const EgfSeries& other) const;
  EgfSeries operator-(const EgfSeries& other) const;
  EgfSeries operator*(const EgfSeries& other) const;
  EgfSeries operator*(const Rational& scalar) const;

  bool operator==(const EgfSeries& other) const {
    return truncation_ == other.truncation_ && terms_ == other.terms_;
  }

 private:
  std::uint64_t truncation_;
  Terms terms_;
};

/// exp(a) = sum a^i / i!, truncated; requires a zero constant term.
EgfSeries series_exp(const EgfSeries& a);

/// (exp(a) + exp(-a)) / 2; requires a zero constant term.
EgfSeries series_cosh(const EgfSeries& a);

/// (exp(a) - exp(-a)) / 2; requires a zero constant term.
EgfSeries series_sinh(const EgfSeries& a);

/// EGF coefficient: raw coefficient of prod t_l^{c_l} times prod c_l!.
/// Throws std::invalid_argument when the type's size exceeds the truncation
/// rather than returning a silently-truncated value.
Rational egf_coefficient(const EgfSeries& series, const CycleType& type);

/// exp(sum over lengths l and root divisors g in G_k(l) of l^{g-1}/g * t_l^g),
/// truncated at the given weight. Its EGF coefficient at a cycle type is the
/// total number of k-th roots of a permutation of that type.
EgfSeries build_total_root_series(std::uint64_t k, std::uint64_t max_weight);

/// Same with the sign (-1)^{l*g+1} on each term; EGF coefficients give the
/// number of even k-th roots minus the number of odd ones.
EgfSeries build_signed_difference_series(std::uint64_t k, std::uint64_t max_weight);

/// One line per term in graded-lex order: `<num>/<den> <l>^<e> ...`, the
/// constant term as a bare `<num>/<den>` line.
std::string series_to_text(const EgfSeries& series);

}  // namespace permroots
