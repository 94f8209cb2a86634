#include "permroots/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "permroots/root_divisors.hpp"

namespace permroots {

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
  if (index == 0) {
    throw std::invalid_argument("monomial: variable index must be >= 1");
  }
  Monomial m;
  if (exponent > 0) {
    m.exponents_.emplace_back(index, exponent);
    m.weight_ = static_cast<std::uint64_t>(index) * exponent;
  }
  return m;
}

Monomial Monomial::from_cycle_type(const CycleType& type) {
  Monomial m;
  for (const auto& [length, mult] : type.parts()) {
    m.exponents_.emplace_back(static_cast<std::uint32_t>(length),
                              static_cast<std::uint32_t>(mult));
  }
  m.weight_ = type.size();
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.exponents_.reserve(exponents_.size() + other.exponents_.size());
  auto a = exponents_.begin();
  auto b = other.exponents_.begin();
  while (a != exponents_.end() || b != other.exponents_.end()) {
    if (b == other.exponents_.end() || (a != exponents_.end() && a->first < b->first)) {
      out.exponents_.push_back(*a++);
    } else if (a == exponents_.end() || b->first < a->first) {
      out.exponents_.push_back(*b++);
    } else {
      out.exponents_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.weight_ = weight_ + other.weight_;
  return out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.weight() != b.weight()) {
    return a.weight() < b.weight();
  }
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  while (ia != a.exponents().end() && ib != b.exponents().end()) {
    if (ia->first != ib->first) {
      // The monomial with a positive exponent on the smaller variable index
      // is bigger there, so it sorts first.
      return ia->first < ib->first;
    }
    if (ia->second != ib->second) {
      return ia->second > ib->second;
    }
    ++ia;
    ++ib;
  }
  return ia != a.exponents().end();
}

EgfSeries EgfSeries::constant(const Rational& value, std::uint64_t truncation) {
  EgfSeries s(truncation);
  s.add_term(Monomial{}, value);
  return s;
}

EgfSeries EgfSeries::variable(std::uint32_t index, std::uint64_t truncation) {
  EgfSeries s(truncation);
  s.add_term(Monomial::variable(index), Rational(1));
  return s;
}

Rational EgfSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void EgfSeries::add_term(const Monomial& m, const Rational& value) {
  if (m.weight() > truncation_ || value.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

EgfSeries EgfSeries::operator-() const {
  EgfSeries out(truncation_);
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(m, -c);
  }
  return out;
}

EgfSeries EgfSeries::operator+(const EgfSeries& other) const {
  EgfSeries out(std::min(truncation_, other.truncation_));
  for (const auto& [m, c] : terms_) {
    out.add_term(m, c);
  }
  for (const auto& [m, c] : other.terms_) {
    out.add_term(m, c);
  }
  return out;
}

EgfSeries EgfSeries::operator-(const EgfSeries& other) const {
  return *this + (-other);
}

EgfSeries EgfSeries::operator*(const EgfSeries& other) const {
  EgfSeries out(std::min(truncation_, other.truncation_));
  for (const auto& [ma, ca] : terms_) {
    if (ma.weight() > out.truncation_) {
      break;  // graded order: everything after is heavier
    }
    for (const auto& [mb, cb] : other.terms_) {
      if (ma.weight() + mb.weight() > out.truncation_) {
        break;
      }
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

EgfSeries EgfSeries::operator*(const Rational& scalar) const {
  EgfSeries out(truncation_);
  if (scalar.is_zero()) {
    return out;
  }
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(m, c * scalar);
  }
  return out;
}

EgfSeries series_exp(const EgfSeries& a) {
  if (!a.coefficient(Monomial{}).is_zero()) {
    throw std::invalid_argument("series_exp: nonzero constant term");
  }
  EgfSeries result = EgfSeries::constant(Rational(1), a.truncation());
  EgfSeries term = result;
  // Minimum weight of a is >= 1, so term i has weight >= i and the loop
  // terminates within truncation + 1 steps.
  for (std::uint64_t i = 1; !term.is_zero(); ++i) {
    term = term * a * make_rational(1, BigInt(i));
    result = result + term;
  }
  return result;
}

EgfSeries series_cosh(const EgfSeries& a) {
  return (series_exp(a) + series_exp(-a)) * make_rational(1, 2);
}

EgfSeries series_sinh(const EgfSeries& a) {
  return (series_exp(a) - series_exp(-a)) * make_rational(1, 2);
}

Rational egf_coefficient(const EgfSeries& series, const CycleType& type) {
  if (type.size() > series.truncation()) {
    throw std::invalid_argument(
        "egf_coefficient: cycle type weight " + std::to_string(type.size()) +
        " exceeds series truncation " + std::to_string(series.truncation()));
  }
  Rational raw = series.coefficient(Monomial::from_cycle_type(type));
  for (const auto& [length, mult] : type.parts()) {
    (void)length;
    raw *= Rational(factorial(mult));
  }
  return raw;
}

namespace {

EgfSeries root_series_exponent(std::uint64_t k, std::uint64_t max_weight, bool with_sign) {
  EgfSeries inner(max_weight);
  for (std::uint64_t length = 1; length <= max_weight; ++length) {
    RootDivisorSet set = root_divisors(k, length);
    for (std::uint64_t g : set.members) {
      if (g * length > max_weight) {
        break;
      }
      Rational coeff = make_rational(int_pow(BigInt(length), g - 1), BigInt(g));
      if (with_sign && (length * g + 1) % 2 != 0) {
        coeff = -coeff;
      }
      inner.add_term(Monomial::variable(static_cast<std::uint32_t>(length),
                                        static_cast<std::uint32_t>(g)),
                     coeff);
    }
  }
  return inner;
}

}  // namespace

EgfSeries build_total_root_series(std::uint64_t k, std::uint64_t max_weight) {
  return series_exp(root_series_exponent(k, max_weight, /*with_sign=*/false));
}

EgfSeries build_signed_difference_series(std::uint64_t k, std::uint64_t max_weight) {
  return series_exp(root_series_exponent(k, max_weight, /*with_sign=*/true));
}

std::string series_to_text(const EgfSeries& series) {
  std::string out;
  for (const auto& [m, c] : series.terms()) {
    out += numerator(c).str();
    out += '/';
    out += denominator(c).str();
    for (const auto& [index, exponent] : m.exponents()) {
      out += ' ';
      out += std::to_string(index);
      out += '^';
      out += std::to_string(exponent);
    }
    out += '\n';
  }
  return out;
}

}  // namespace permroots
