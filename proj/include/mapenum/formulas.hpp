#pragma once

#include <functional>
#include <map>

#include "mapenum/arrays.hpp"
#include "mapenum/combinatorics.hpp"
#include "mapenum/cycle_count_vector.hpp"
#include "mapenum/polynomial.hpp"

namespace mapenum {

/// One-vertex maps with q edges: (2q-1)!! sum_k 2^{k-1} C(q, k-1) C(x, k).
BinomialPoly hz_series(int q);

/// Two-vertex maps with q1, q2 loops and s connecting edges, as the triple
/// sum over k, i, j with the Delta_k difference of binomial products.
BinomialPoly gs_series(int q1, int q2, int s);

/// The same series as a double sum over t1, t2 (difference of two
/// reciprocal-factorial products), accumulated per k = d - t1 - t2 + 1.
BinomialPoly gs_series_simplified(int q1, int q2, int s);

/// Proper vertical arrays with K columns, R1/R2 marks and s mixed pairs.
/// Zero when R1 or R2 is below 1.
BigInt vertical_count_formula(int K, int R1, int R2, int s);

/// Arrowed arrays satisfying an irreducible, full substructure, from its
/// column-type census.
BigInt gamma_count_formula(const SubstructureGamma& g);

/// Arrowed arrays satisfying a substructure without arrows; the full
/// condition is not needed.
BigInt gamma_count_formula_noarrows(const SubstructureGamma& g);

/// Proper vertical arrays with fixed balanced occupancy.
BigInt omega_count_formula(const SubstructureOmega& o);

using VerticalCountSource = std::function<BigInt(int K, int R1, int R2, int s)>;

/// Canonical arrays from vertical-array counts by stripping the t_i
/// within-row pairs.
BigInt canonical_from_vertical(int K, int q1, int q2, int s, const VerticalCountSource& vertical);

/// sum_K f_K C(x, K).
BinomialPoly series_from_surjections(const std::map<int, BigInt>& f);

/// Reindexes face counts by genus via 2 - 2g = V - E + F.
std::map<int, BigInt> genus_counts(const CycleCountVector& v, int n_vertices, int d_edges);

/// Monomial coefficients of a map series read back as face counts.
CycleCountVector series_cycle_counts(const BinomialPoly& series, int pairs);

}  // namespace mapenum
