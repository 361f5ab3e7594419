#include <gtest/gtest.h>

#include "mapenum/errors.hpp"
#include "mapenum/brute_force.hpp"
#include "mapenum/formulas.hpp"

using namespace mapenum;

namespace {

Occupancy occ(std::vector<int> top, std::vector<int> bottom) { return {std::move(top), std::move(bottom)}; }

std::string monomial(const BinomialPoly& p) { return format_monomial(binomial_to_monomial(p)); }

}  // namespace

TEST(HzSeries, Anchors) {
  EXPECT_EQ(monomial(hz_series(1)), "x^2");
  EXPECT_EQ(monomial(hz_series(2)), "2x^3 + x");
  EXPECT_EQ(hz_series(2), BinomialPoly({{1, 3}, {2, 12}, {3, 12}}));
  EXPECT_THROW(hz_series(0), PreconditionError);
}

TEST(GsSeries, Anchors) {
  EXPECT_EQ(monomial(gs_series(0, 0, 1)), "x");
  EXPECT_EQ(monomial(gs_series(0, 0, 2)), "2x^2");
  EXPECT_EQ(monomial(gs_series_simplified(0, 0, 1)), "x");
  EXPECT_EQ(monomial(gs_series_simplified(0, 0, 2)), "2x^2");
  EXPECT_THROW(gs_series(1, 1, 0), PreconditionError);
  EXPECT_THROW(gs_series_simplified(1, 1, 0), PreconditionError);
}

TEST(GsSeries, ValueAtOneIsPairingTotal) {
  for (int q1 = 0; q1 <= 4; ++q1) {
    for (int q2 = 0; q2 <= 4; ++q2) {
      for (int s = 1; s <= 4; ++s) {
        const BigInt total = binomial(2 * q1 + s, s) * binomial(2 * q2 + s, s) * factorial(s) *
                             double_factorial(2 * q1 - 1) * double_factorial(2 * q2 - 1);
        EXPECT_EQ(poly_eval(gs_series(q1, q2, s), 1), Rational(total));
      }
    }
  }
}

TEST(VerticalCountFormula, Examples) {
  EXPECT_EQ(vertical_count_formula(1, 1, 1, 1), 1);
  EXPECT_EQ(vertical_count_formula(1, 1, 1, 2), 2);
  EXPECT_EQ(vertical_count_formula(3, 1, 1, 1), 0);
  EXPECT_EQ(vertical_count_formula(2, 0, 1, 1), 0);
  EXPECT_THROW(vertical_count_formula(0, 1, 1, 1), PreconditionError);
}

TEST(GammaCountFormula, Examples) {
  const SubstructureGamma all_d(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{0, 1, 2}, ColumnSet{0, 1, 2}});
  EXPECT_EQ(gamma_count_formula(all_d), 6);
  const SubstructureGamma ad(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}});
  EXPECT_EQ(gamma_count_formula(ad), 1);
  // Two A columns and s = 2: every vertex is critical in an A column.
  const SubstructureGamma aad(3, occ({1, 1, 0}, {1, 1, 0}), {ColumnSet{2}, ColumnSet{2}});
  EXPECT_EQ(gamma_count_formula(aad), 0);
  EXPECT_EQ(brute::gamma_count_brute(aad), 0);
}

TEST(GammaCountFormula, RejectsReducibleOrNonFull) {
  const SubstructureGamma reducible(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}}, {{0, 1}});
  EXPECT_THROW(gamma_count_formula(reducible), PreconditionError);
  const SubstructureGamma not_full(2, occ({1, 0}, {1, 0}), {ColumnSet{0}, ColumnSet{1}});
  EXPECT_THROW(gamma_count_formula(not_full), PreconditionError);
}

TEST(GammaCountFormulaNoArrows, Examples) {
  for (int s = 1; s <= 5; ++s) {
    EXPECT_EQ(gamma_count_formula_noarrows(SubstructureGamma(1, occ({s}, {s}), {ColumnSet{0}, ColumnSet{0}})),
              factorial(s));
  }
  for (int s = 1; s <= 4; ++s) {
    const SubstructureGamma g(2, occ({0, s}, {0, s}), {ColumnSet{0}, ColumnSet{0}});
    EXPECT_EQ(gamma_count_formula_noarrows(g), 0) << "s=" << s;
    EXPECT_EQ(brute::gamma_count_brute(g), 0);
  }
  const SubstructureGamma with_arrow(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}}, {{0, 1}});
  EXPECT_THROW(gamma_count_formula_noarrows(with_arrow), PreconditionError);
}

TEST(OmegaCountFormula, Examples) {
  EXPECT_EQ(omega_count_formula(SubstructureOmega(1, 1, 1, {2})), 2);
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(omega_count_formula(SubstructureOmega(1, 1, 1, {s})), factorial(s));
}

TEST(CanonicalFromVertical, Examples) {
  EXPECT_EQ(canonical_from_vertical(1, 1, 0, 1, vertical_count_formula), 3);
  EXPECT_EQ(canonical_from_vertical(1, 0, 0, 1, vertical_count_formula), 1);
  EXPECT_EQ(canonical_from_vertical(1, 1, 0, 1, brute::vertical_array_count_brute), 3);
}

TEST(SeriesFromSurjections, Examples) {
  EXPECT_EQ(series_from_surjections({{1, BigInt(1)}}), gs_series(0, 0, 1));
  std::map<int, BigInt> f;
  for (int K = 1; K <= 4; ++K) f[K] = brute::paired_surjection_count_brute(K, 0, 0, 2);
  EXPECT_EQ(monomial(series_from_surjections(f)), "2x^2");
}

TEST(GenusCounts, Examples) {
  EXPECT_EQ(genus_counts(brute::hz_counts_brute(2), 1, 2), (std::map<int, BigInt>{{0, 2}, {1, 1}}));
  EXPECT_EQ(genus_counts(brute::gs_counts_brute(0, 0, 2), 2, 2), (std::map<int, BigInt>{{0, 2}}));
  EXPECT_EQ(genus_counts(brute::gs_counts_brute(0, 0, 1), 2, 1), (std::map<int, BigInt>{{0, 1}}));
  CycleCountVector corrupt(2);
  corrupt.add(2);
  EXPECT_THROW(genus_counts(corrupt, 1, 2), PreconditionError);
}

TEST(SeriesCycleCounts, HarerZagierLargeQ) {
  // q = 10 is out of brute-force reach; check the total and the planar term.
  const CycleCountVector v = series_cycle_counts(hz_series(10), 10);
  EXPECT_EQ(v.total(), double_factorial(19));
  EXPECT_EQ(v.count(11), 16796);  // Catalan(10) plane trees
}
