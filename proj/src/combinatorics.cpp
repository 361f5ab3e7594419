#include "mapenum/combinatorics.hpp"

#include <numeric>

namespace mapenum {

BigInt factorial(long n) {
  require(n >= 0, "factorial: argument must be non-negative, got " + std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Rational reciprocal_factorial(long n) {
  if (n < 0) return Rational(0);
  Rational result(BigInt(1), factorial(n));
  result.canonicalize();
  return result;
}

BigInt double_factorial(long m) {
  require(m >= -1, "double_factorial: argument must be >= -1, got " + std::to_string(m));
  if (m <= 0) return BigInt(1);
  require(m % 2 == 1, "double_factorial: only odd arguments are supported, got " + std::to_string(m));
  BigInt result;
  mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
  return result;
}

BigInt binomial(long n, long k) {
  require(n >= 0, "binomial: n must be non-negative, got " + std::to_string(n));
  if (k < 0 || k > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt multinomial(std::span<const long> parts) {
  long total = 0;
  for (long part : parts) {
    if (part < 0) return BigInt(0);
    total += part;
  }
  BigInt result = factorial(total);
  for (long part : parts) result /= factorial(part);
  return result;
}

BigInt multinomial(std::initializer_list<long> parts) {
  return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

BigInt pow2(unsigned long e) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, e);
  return result;
}

BigInt to_integer(const Rational& value, const std::string& context) {
  Rational reduced = value;
  reduced.canonicalize();
  if (reduced.get_den() != 1) {
    throw IntegralityError(context + ": expected an integer, got " + reduced.get_str());
  }
  return reduced.get_num();
}

std::string to_string(const BigInt& value) { return value.get_str(); }
std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace mapenum
