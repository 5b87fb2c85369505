#include "hookbound/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hookbound {

BigInt factorial(std::uint32_t n) {
  BigInt result = 1;
  for (std::uint32_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt falling_factorial(std::uint32_t n, std::uint32_t k) {
  if (k > n) {
    throw std::domain_error("falling_factorial: k = " + std::to_string(k) +
                            " exceeds n = " + std::to_string(n));
  }
  BigInt result = 1;
  for (std::uint32_t i = 0; i < k; ++i) result *= (n - i);
  return result;
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt pow(const BigInt& base, std::uint32_t exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational pow(const Rational& base, std::uint32_t exponent) {
  return Rational(pow(boost::multiprecision::numerator(base), exponent),
                  pow(boost::multiprecision::denominator(base), exponent));
}

BigInt to_integer(const Rational& value) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error("expected an integer, got " + to_string(value));
  }
  return boost::multiprecision::numerator(value);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

namespace constants {

Rational e_upper() { return Rational(2719, 1000); }
Rational e_lower() { return Rational(2718, 1000); }
Rational e_squared_upper() { return Rational(739, 100); }
Rational four_e_squared_upper() { return 4 * e_squared_upper(); }
Rational excited_general_upper() {
  return 2 * e_upper() * four_e_squared_upper();
}

}  // namespace constants

namespace {

double log_of(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::msb;
  using boost::multiprecision::numerator;
  // log of a big integer via its top bits, safe beyond the double range
  auto log_int = [](const BigInt& x) {
    const unsigned bits = msb(x);
    if (bits < 60) return std::log(static_cast<double>(x));
    const unsigned shift = bits - 52;
    const BigInt top = x >> shift;
    return std::log(static_cast<double>(top)) + shift * std::log(2.0);
  };
  return log_int(numerator(value)) - log_int(denominator(value));
}

}  // namespace

Rational implied_constant(const Rational& lhs, const Rational& rhs,
                          std::uint32_t power, std::uint32_t resolution) {
  if (rhs <= 0) throw std::invalid_argument("implied_constant: rhs <= 0");
  if (power == 0) throw std::invalid_argument("implied_constant: power = 0");
  const Rational step(1, resolution);
  if (lhs <= 0) return step;

  const Rational target = lhs / rhs;
  const double estimate =
      std::exp(log_of(target) / static_cast<double>(power)) * resolution;
  std::int64_t j = std::max<std::int64_t>(1, static_cast<std::int64_t>(estimate) - 2);
  auto holds = [&](std::int64_t grid) {
    return pow(Rational(grid, resolution), power) >= target;
  };
  while (!holds(j)) ++j;
  while (j > 1 && holds(j - 1)) --j;
  return Rational(j, resolution);
}

}  // namespace hookbound
