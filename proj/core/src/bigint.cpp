#include "permprop/bigint.hpp"

#include <stdexcept>

namespace permprop {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string decimal_string(const BigRat& value, int digits) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = sign + whole.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      const BigInt digit = rem / den;
      rem %= den;
      out += static_cast<char>('0' + digit.convert_to<int>());
    }
  }
  return out;
}

double to_double(const BigRat& value) {
  return value.convert_to<double>();
}

}  // namespace permprop
