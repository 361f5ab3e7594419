#pragma once

#include <map>
#include <string>

#include "mapenum/combinatorics.hpp"

namespace mapenum {

/// Polynomial in the binomial basis: sum_k c_k * C(x, k), integer c_k.
/// Zero coefficients are never stored.
class BinomialPoly {
 public:
  BinomialPoly() = default;
  explicit BinomialPoly(const std::map<long, BigInt>& coeffs);

  void add_term(long k, const BigInt& c);
  BigInt coeff(long k) const;
  const std::map<long, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const BinomialPoly&, const BinomialPoly&) = default;

 private:
  std::map<long, BigInt> coeffs_;
};

/// Polynomial in the monomial basis with exact rational coefficients.
class MonomialPoly {
 public:
  MonomialPoly() = default;
  explicit MonomialPoly(const std::map<long, Rational>& coeffs);

  void add_term(long power, const Rational& c);
  Rational coeff(long power) const;
  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  long degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  std::map<long, Rational> coeffs_;
};

/// Expands C(x,k) = x(x-1)...(x-k+1)/k! term by term.
MonomialPoly binomial_to_monomial(const BinomialPoly& p);

/// Inverse of binomial_to_monomial via forward differences at 0..deg.
/// Throws IntegralityError unless p is integer-valued on the integers.
BinomialPoly monomial_to_binomial(const MonomialPoly& p);

Rational poly_eval(const BinomialPoly& p, long x);
Rational poly_eval(const MonomialPoly& p, long x);

/// Human-readable form, e.g. "2x^3 + x" or "3*C(x,1) + 12*C(x,2)".
std::string format_monomial(const MonomialPoly& p);
std::string format_binomial(const BinomialPoly& p);

}  // namespace mapenum
