#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

#include "mapenum/errors.hpp"

namespace mapenum {

using BigInt = mpz_class;
using Rational = mpq_class;

/// n! for n >= 0. Throws PreconditionError for negative n.
BigInt factorial(long n);

/// 1/n! with the convention 1/n! = 0 for n < 0. Lets finite sums truncate
/// themselves wherever a negative factorial lands in a denominator.
Rational reciprocal_factorial(long n);

/// (2k-1)!! = 1*3*...*(2k-1) for m = 2k-1; 1 for m in {-1, 0}.
/// Even positive m and m < -1 are rejected.
BigInt double_factorial(long m);

/// C(n, k) for n >= 0, zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// (sum parts)! / prod(parts!), or 0 if any part is negative.
BigInt multinomial(std::span<const long> parts);
BigInt multinomial(std::initializer_list<long> parts);

/// 2^e for e >= 0.
BigInt pow2(unsigned long e);

/// Converts a rational known to be integral, throwing IntegralityError with
/// `context` in the message otherwise.
BigInt to_integer(const Rational& value, const std::string& context);

/// Decimal string of an exact integer.
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace mapenum
