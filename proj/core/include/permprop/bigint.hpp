#ifndef PERMPROP_BIGINT_HPP
#define PERMPROP_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permprop {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(t, 2) = t(t-1)/2 in plain 64-bit arithmetic; t must stay below 2^32.
constexpr std::int64_t choose2(std::int64_t t) {
  return t * (t - 1) / 2;
}

/// Decimal expansion of a rational with exactly `digits` fractional digits,
/// truncated toward zero. Deterministic: used for byte-stable CSV/JSON output.
std::string decimal_string(const BigRat& value, int digits);

double to_double(const BigRat& value);

}  // namespace permprop

#endif  // PERMPROP_BIGINT_HPP
