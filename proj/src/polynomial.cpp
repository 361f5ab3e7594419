#include "mapenum/polynomial.hpp"

#include <vector>

namespace mapenum {

BinomialPoly::BinomialPoly(const std::map<long, BigInt>& coeffs) {
  for (const auto& [k, c] : coeffs) add_term(k, c);
}

void BinomialPoly::add_term(long k, const BigInt& c) {
  require(k >= 0, "BinomialPoly: basis index must be non-negative, got " + std::to_string(k));
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt BinomialPoly::coeff(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

MonomialPoly::MonomialPoly(const std::map<long, Rational>& coeffs) {
  for (const auto& [power, c] : coeffs) add_term(power, c);
}

void MonomialPoly::add_term(long power, const Rational& c) {
  require(power >= 0, "MonomialPoly: power must be non-negative, got " + std::to_string(power));
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational MonomialPoly::coeff(long power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

namespace {

// Coefficients of the falling factorial x(x-1)...(x-k+1), lowest power first.
std::vector<BigInt> falling_factorial_coeffs(long k) {
  std::vector<BigInt> poly{BigInt(1)};
  for (long i = 0; i < k; ++i) {
    std::vector<BigInt> next(poly.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * i;
    }
    poly = std::move(next);
  }
  return poly;
}

Rational generalized_binomial(long x, long k) {
  if (x >= 0) return Rational(binomial(x, k));
  BigInt falling(1);
  for (long i = 0; i < k; ++i) falling *= (x - i);
  Rational result(falling, factorial(k));
  result.canonicalize();
  return result;
}

}  // namespace

MonomialPoly binomial_to_monomial(const BinomialPoly& p) {
  MonomialPoly out;
  for (const auto& [k, c] : p.coeffs()) {
    const std::vector<BigInt> falling = falling_factorial_coeffs(k);
    const BigInt k_fact = factorial(k);
    for (std::size_t power = 0; power < falling.size(); ++power) {
      if (falling[power] == 0) continue;
      Rational term(c * falling[power], k_fact);
      term.canonicalize();
      out.add_term(static_cast<long>(power), term);
    }
  }
  return out;
}

BinomialPoly monomial_to_binomial(const MonomialPoly& p) {
  const long degree = p.degree();
  BinomialPoly out;
  if (degree < 0) return out;
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(degree) + 1);
  for (long x = 0; x <= degree; ++x) values.push_back(poly_eval(p, x));
  // Newton forward differences: c_k = (Delta^k p)(0).
  for (long k = 0; k <= degree; ++k) {
    out.add_term(k, to_integer(values[0], "monomial_to_binomial"));
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return out;
}

Rational poly_eval(const BinomialPoly& p, long x) {
  Rational total(0);
  for (const auto& [k, c] : p.coeffs()) total += c * generalized_binomial(x, k);
  return total;
}

Rational poly_eval(const MonomialPoly& p, long x) {
  Rational total(0);
  const BigInt base(x);
  for (const auto& [power, c] : p.coeffs()) {
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(power));
    total += c * term;
  }
  return total;
}

std::string format_monomial(const MonomialPoly& p) {
  if (p.coeffs().empty()) return "0";
  std::string out;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [power, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (!unit || power == 0) out += magnitude.get_str();
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

std::string format_binomial(const BinomialPoly& p) {
  if (p.coeffs().empty()) return "0";
  std::string out;
  for (const auto& [k, c] : p.coeffs()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const BigInt magnitude = abs(c);
    out += magnitude.get_str() + "*C(x," + std::to_string(k) + ")";
  }
  return out;
}

}  // namespace mapenum
