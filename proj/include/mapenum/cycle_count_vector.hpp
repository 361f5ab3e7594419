#pragma once

#include <vector>

#include "mapenum/combinatorics.hpp"
#include "mapenum/polynomial.hpp"

namespace mapenum {

/// Exact counts a_L, L = 1..d+1, of pairings whose face permutation has L
/// cycles.
class CycleCountVector {
 public:
  explicit CycleCountVector(int pairs);

  int pairs() const { return pairs_; }
  int max_cycles() const { return pairs_ + 1; }
  /// a_L; zero outside 1..d+1.
  BigInt count(int cycles) const;
  void add(int cycles, const BigInt& amount = BigInt(1));
  BigInt total() const;

  /// sum_L a_L x^L.
  MonomialPoly to_monomial() const;
  /// Reads a_L off the monomial coefficients, which must be non-negative
  /// integers of degree 1..d+1.
  static CycleCountVector from_monomial(int pairs, const MonomialPoly& p);

  friend bool operator==(const CycleCountVector&, const CycleCountVector&) = default;

 private:
  int pairs_;
  std::vector<BigInt> counts_;  // counts_[L-1] = a_L
};

}  // namespace mapenum
