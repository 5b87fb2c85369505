#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint32_t n);

/// n(n-1)...(n-k+1). Throws std::domain_error when k > n.
BigInt falling_factorial(std::uint32_t n, std::uint32_t k);

/// Zero when k > n.
BigInt binomial(std::uint32_t n, std::uint32_t k);

BigInt pow(const BigInt& base, std::uint32_t exponent);
Rational pow(const Rational& base, std::uint32_t exponent);

/// Exact when the denominator is 1, otherwise throws std::logic_error.
BigInt to_integer(const Rational& value);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Rational enclosures of transcendental constants. Every "upper" value is
/// >= the true constant and every "lower" value is <= it, so inequalities
/// checked against them stay exact in the safe direction.
namespace constants {

/// e rounded up to three decimals (2.719).
Rational e_upper();
/// e rounded down to three decimals (2.718).
Rational e_lower();
/// e^2 rounded up to hundredths (7.39).
Rational e_squared_upper();
/// 4e^2 built from e_squared_upper.
Rational four_e_squared_upper();
/// 2e * 4e^2, the constant of the general excited-sum bound.
Rational excited_general_upper();

}  // namespace constants

/// Smallest value C on the grid {j / resolution : j >= 1} with
/// lhs <= C^power * rhs. `rhs` must be positive and `power` >= 1.
Rational implied_constant(const Rational& lhs, const Rational& rhs,
                          std::uint32_t power,
                          std::uint32_t resolution = 1000000);

}  // namespace hookbound
