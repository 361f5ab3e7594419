#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mapenum/arrays.hpp"
#include "mapenum/combinatorics.hpp"
#include "mapenum/cycle_count_vector.hpp"
#include "mapenum/pairing.hpp"

// Exhaustive enumeration oracles. Nothing here may call into the formula
// module: these are the ground truth the formulas are checked against.

namespace mapenum::brute {

using PartnerVisitor = std::function<void(std::span<const int> partner)>;

/// Visits every pairing of {0..n-1} exactly once. The smallest unpaired
/// element is paired with each larger candidate in increasing order.
void for_each_pairing(int ground_size, const PartnerVisitor& visit);

/// The slice of for_each_pairing in which element 0 is paired with
/// `first_partner`. Slices for first_partner = 1..n-1 partition the stream.
void for_each_pairing_with_first_partner(int ground_size, int first_partner, const PartnerVisitor& visit);

std::vector<Pairing> enumerate_pairings_one_row(int q);

/// All pairings of [p1, p2] with exactly q_i within-row pairs in row i and s
/// mixed pairs, in for_each_pairing order.
std::vector<Pairing> enumerate_two_row_pairings(int q1, int q2, int s);

/// a_L = #{pairings mu of [2q] : mu o gamma^{-1} has L cycles}.
/// `workers` > 1 fans out over the partner of element 0.
CycleCountVector hz_counts_brute(int q, int workers = 1);

CycleCountVector gs_counts_brute(int q1, int q2, int s, int workers = 1);

using SurjectionVisitor = std::function<void(const Pairing& mu, std::span<const int> pi)>;

/// Visits every paired surjection (mu, pi): mu in P^(q1,q2;s) and
/// pi: [p1,p2] -> {0..K-1} onto, with pi(mu(v)) = pi(gamma(v)).
void for_each_paired_surjection(int K, int q1, int q2, int s, const SurjectionVisitor& visit);

/// Number of pairs (mu, pi) with pi: [p1,p2] -> [K] surjective and
/// pi(mu(v)) = pi(gamma(v)) for all v.
BigInt paired_surjection_count_brute(int K, int q1, int q2, int s);

/// Proper paired arrays with one marked column per row.
BigInt canonical_array_count_brute(int K, int q1, int q2, int s);

/// Same count, built from PairedArray objects and the arrays-module checkers.
BigInt canonical_array_count_brute_via_arrays(int K, int q1, int q2, int s);

/// Proper vertical arrays with R1 and R2 marked columns.
BigInt vertical_array_count_brute(int K, int R1, int R2, int s);

/// A fixed pair between the vertex at `top_position` of cell (0, top_column)
/// and the vertex at `bottom_position` of cell (1, bottom_column).
struct FixedPair {
  int top_column;
  int top_position;
  int bottom_column;
  int bottom_position;
};

/// Number of slot matchings satisfying the forest condition under `g`,
/// optionally restricted to those containing `fixed`.
BigInt gamma_count_brute(const SubstructureGamma& g, std::optional<FixedPair> fixed = std::nullopt);

/// Same count, built from ArrowedArray objects and the arrays-module
/// checkers. Slower; used to cross-check the two paths.
BigInt gamma_count_brute_via_arrays(const SubstructureGamma& g);

/// Proper vertical arrays with occupancy w in both rows.
BigInt omega_count_brute(const SubstructureOmega& o);

/// Weak compositions of `total` into `parts` parts; first part descending.
void for_each_weak_composition(int total, int parts, const std::function<void(std::span<const int>)>& visit);

/// Subsets of {0..n-1} of size k, in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const ColumnSet&)>& visit);

}  // namespace mapenum::brute
