#pragma once

#include <random>
#include <variant>

#include "mapenum/arrays.hpp"

namespace mapenum {

/// X points to Y and (0, Y) is marked: drop the arrow and mark (0, X).
SubstructureGamma arrow_simplify_to_mark(const SubstructureGamma& g, int x);

/// X points to Y and Y points to Z: make X point to Z. A 2-cycle X -> Y -> X
/// becomes the self-loop X -> X.
SubstructureGamma arrow_simplify_retarget(const SubstructureGamma& g, int x);

/// The arrow digraph contains a cycle; no array satisfies the substructure.
struct CycleDetected {
  friend bool operator==(const CycleDetected&, const CycleDetected&) = default;
};

using ClosureResult = std::variant<SubstructureGamma, CycleDetected>;

/// Applies the two arrow simplifications until the substructure is
/// irreducible, always rewriting the smallest reducible tail first.
ClosureResult irreducible_closure(const SubstructureGamma& g);

/// Same closure, picking the next reducible tail uniformly at random.
ClosureResult irreducible_closure(const SubstructureGamma& g, std::mt19937_64& rng);

/// Replaces the pair {v, u} by the arrow X -> Y, where v is the rightmost
/// (critical) vertex of (0, X) and u the vertex at `bottom_position` of
/// (1, Y), which must not be critical.
SubstructureGamma column_pointing(const SubstructureGamma& g, int x, int y, int bottom_position = 0);

/// Merges column Y into column X through the pair {v, u} of the critical
/// rightmost vertices of (0, X) and (1, Y). Requires the full condition.
/// Columns after Y shift down by one.
SubstructureGamma column_merging(const SubstructureGamma& g, int x, int y);

/// Canonical array of a paired surjection: cell (i, j) holds the row-i
/// elements of pi^{-1}(j) in label order, and each row marks the column of
/// its label 1. `pi` maps ground indices of [p1, p2] to columns 0..K-1.
PairedArray labelled_to_canonical(const TwoRowGround& ground, const Pairing& mu, std::span<const int> pi, int K);

}  // namespace mapenum
