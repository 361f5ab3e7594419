#include "mapenum/cycle_count_vector.hpp"

#include <string>

namespace mapenum {

CycleCountVector::CycleCountVector(int pairs) : pairs_(pairs) {
  require(pairs >= 0, "CycleCountVector: pair count must be non-negative");
  counts_.assign(static_cast<std::size_t>(pairs) + 1, BigInt(0));
}

BigInt CycleCountVector::count(int cycles) const {
  if (cycles < 1 || cycles > max_cycles()) return BigInt(0);
  return counts_[static_cast<std::size_t>(cycles - 1)];
}

void CycleCountVector::add(int cycles, const BigInt& amount) {
  require(cycles >= 1 && cycles <= max_cycles(),
          "CycleCountVector: cycle count " + std::to_string(cycles) + " out of range 1.." +
              std::to_string(max_cycles()));
  counts_[static_cast<std::size_t>(cycles - 1)] += amount;
}

BigInt CycleCountVector::total() const {
  BigInt sum(0);
  for (const BigInt& c : counts_) sum += c;
  return sum;
}

MonomialPoly CycleCountVector::to_monomial() const {
  MonomialPoly p;
  for (int cycles = 1; cycles <= max_cycles(); ++cycles) p.add_term(cycles, Rational(count(cycles)));
  return p;
}

CycleCountVector CycleCountVector::from_monomial(int pairs, const MonomialPoly& p) {
  CycleCountVector v(pairs);
  for (const auto& [power, c] : p.coeffs()) {
    const BigInt value = to_integer(c, "CycleCountVector::from_monomial");
    require(value >= 0, "CycleCountVector: negative coefficient at x^" + std::to_string(power));
    v.add(static_cast<int>(power), value);
  }
  return v;
}

}  // namespace mapenum
