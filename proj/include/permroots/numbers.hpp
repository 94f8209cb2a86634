#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace permroots {

using BigInt = boost::multiprecision::cpp_int;

// Always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den in lowest terms; den must be nonzero.
Rational make_rational(BigInt num, BigInt den);

BigInt factorial(std::uint64_t n);

BigInt int_pow(const BigInt& base, std::uint64_t exp);

// Quotient of an exact division; throws std::logic_error on a nonzero remainder.
BigInt exact_div(const BigInt& num, const BigInt& den);

bool is_integral(const Rational& q);

// Numerator of an integral rational; throws std::logic_error otherwise.
BigInt to_integer(const Rational& q);

std::string to_decimal(const BigInt& v);

}  // namespace permroots
