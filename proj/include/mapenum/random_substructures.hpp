#pragma once

#include <optional>
#include <random>

#include "mapenum/arrays.hpp"
#include "mapenum/brute_force.hpp"

// Seeded generators for randomized sweeps over substructures.

namespace mapenum::random {

using Rng = std::mt19937_64;

/// Which branch of the arrowed-array count an irreducible full substructure
/// falls in, by vertices per row s against type-A column count A.
enum class GammaBranch { General, OneAboveA, AtMostA };

GammaBranch branch_of(const SubstructureGamma& g);

/// Arbitrary substructure: random occupancy, marks and (with probability
/// `arrow_rate` per eligible column) arrows. May be reducible or cyclic.
SubstructureGamma any_gamma(Rng& rng, int max_columns, int max_vertices, double arrow_rate = 0.3);

/// Irreducible substructure satisfying the full condition, or nullopt when
/// the sampled shape cannot be filled with the sampled vertex count.
std::optional<SubstructureGamma> irreducible_full_gamma(Rng& rng, int max_columns, int max_vertices);

/// Irreducible full substructure with s <= A: every vertex sits in a type-A
/// column and every other column is satisfied by marks or an arrow-tail.
SubstructureGamma irreducible_full_gamma_at_most_a(Rng& rng, int max_columns, int max_vertices);

/// Substructure with no arrows, not necessarily full. `balanced` forces
/// equal occupancy in the two rows.
SubstructureGamma arrowless_gamma(Rng& rng, int max_columns, int max_vertices, bool balanced);

/// An instance for one of the lemma transforms together with its arguments.
struct LemmaCase {
  SubstructureGamma gamma;
  int x;
  int y;
  int bottom_position = 0;
};

std::optional<LemmaCase> to_mark_case(Rng& rng, int max_columns, int max_vertices);
std::optional<LemmaCase> retarget_case(Rng& rng, int max_columns, int max_vertices);
std::optional<LemmaCase> pointing_case(Rng& rng, int max_columns, int max_vertices);
std::optional<LemmaCase> merging_case(Rng& rng, int max_columns, int max_vertices);

}  // namespace mapenum::random
