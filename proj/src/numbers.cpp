#include "permroots/numbers.hpp"

#include <stdexcept>
#include <utility>

namespace permroots {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt int_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) {
      result *= b;
    }
    exp >>= 1;
    if (exp > 0) {
      b *= b;
    }
  }
  return result;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error("exact_div: division left remainder " + r.str());
  }
  return q;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

BigInt to_integer(const Rational& q) {
  if (!is_integral(q)) {
    throw std::logic_error("to_integer: not an integer: " + q.str());
  }
  return numerator(q);
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace permroots
