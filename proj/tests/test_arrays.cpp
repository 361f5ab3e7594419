#include <gtest/gtest.h>

#include "mapenum/errors.hpp"
#include "mapenum/arrays.hpp"

using namespace mapenum;

namespace {

Occupancy occ(std::vector<int> top, std::vector<int> bottom) { return {std::move(top), std::move(bottom)}; }

// One column, one mixed pair: slots 0 (top) and 1 (bottom).
PairedArray single_edge() { return PairedArray(1, occ({1}, {1}), {ColumnSet{0}, ColumnSet{0}}, Pairing({1, 0})); }

}  // namespace

TEST(PairedArray, SlotLayout) {
  const PairedArray a(2, occ({2, 1}, {0, 1}), {ColumnSet{0}, ColumnSet{1}}, Pairing({3, 2, 1, 0}));
  EXPECT_EQ(a.slot(0, 1, 0), 2);
  EXPECT_EQ(a.slot(1, 1, 0), 3);
  EXPECT_EQ(a.slot_column(1), 0);
  EXPECT_EQ(a.mixed_pairs(), 1);
  EXPECT_EQ(a.nonmixed_pairs(0), 1);
  EXPECT_FALSE(a.is_vertical());
  EXPECT_THROW(PairedArray(1, occ({1}, {1}), {ColumnSet{}, ColumnSet{0}}, Pairing({1, 0})), PreconditionError);
}

TEST(CheckNonempty, Examples) {
  EXPECT_TRUE(check_nonempty(SubstructureGamma(1, occ({0}, {0}), {ColumnSet{0}, ColumnSet{0}})));
  EXPECT_FALSE(check_nonempty(SubstructureGamma(2, occ({1, 0}, {1, 0}), {ColumnSet{0}, ColumnSet{0}})));
  EXPECT_TRUE(check_nonempty(SubstructureGamma(2, occ({1, 0}, {1, 0}), {ColumnSet{0}, ColumnSet{0}}, {{1, 0}})));
}

TEST(CheckBalance, Examples) {
  EXPECT_TRUE(check_balance(SubstructureGamma(2, occ({1, 2}, {1, 2}), {ColumnSet{0}, ColumnSet{0}})));
  EXPECT_FALSE(check_balance(SubstructureGamma(2, occ({1, 0}, {0, 1}), {ColumnSet{0}, ColumnSet{0}})));
  // Paired arrays only compare mixed vertices: a within-row pair adds nothing.
  const PairedArray a(1, occ({3}, {1}), {ColumnSet{0}, ColumnSet{0}}, Pairing({3, 2, 1, 0}));
  EXPECT_TRUE(check_balance(a));
  EXPECT_FALSE(vertex_balance(a.occupancy()));
}

TEST(ForestFunction, Examples) {
  // Two unmarked-in-row-0 columns pairing crosswise.
  const PairedArray a(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}}, Pairing({3, 2, 1, 0}));
  const ColumnMap psi0 = forest_function(a, 0);
  EXPECT_EQ(psi0, (ColumnMap{{0, 1}}));
  EXPECT_TRUE(check_forest(a));
  const PairedArray loop(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}}, Pairing({2, 3, 0, 1}));
  EXPECT_FALSE(check_forest(loop));
  const PairedArray marked(2, occ({1, 1}, {1, 1}), {ColumnSet{0, 1}, ColumnSet{0, 1}}, Pairing({2, 3, 0, 1}));
  EXPECT_TRUE(forest_function(marked, 0).empty());
  EXPECT_TRUE(check_forest(marked));
}

TEST(ForestFunction, ArrowsTakePrecedence) {
  const PairedArray base(3, occ({1, 0, 1}, {1, 0, 1}), {ColumnSet{2}, ColumnSet{2}}, Pairing({2, 3, 0, 1}));
  const ArrowedArray a(base, {{0, 1}, {1, 2}});
  EXPECT_EQ(forest_function(a, 0), (ColumnMap{{0, 1}, {1, 2}}));
  EXPECT_TRUE(is_rooted_forest(forest_function(a, 0), ColumnSet{2}));
  EXPECT_FALSE(is_rooted_forest(ColumnMap{{0, 0}}, ColumnSet{1}));
}

TEST(CheckFull, Examples) {
  EXPECT_TRUE(check_full(SubstructureGamma(2, occ({0, 0}, {0, 0}), {ColumnSet{0, 1}, ColumnSet{0, 1}})));
  EXPECT_FALSE(check_full(SubstructureGamma(2, occ({1, 0}, {1, 0}), {ColumnSet{0}, ColumnSet{1}})));
  EXPECT_TRUE(check_full(substructure_of(ArrowedArray(single_edge(), {}))));
}

TEST(CriticalVertices, Examples) {
  const SubstructureGamma g(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{0}, ColumnSet{2}}, {{1, 2}});
  EXPECT_FALSE(has_critical_vertex(g, 0, 0));  // marked
  EXPECT_FALSE(has_critical_vertex(g, 0, 1));  // arrow-tail
  EXPECT_TRUE(has_critical_vertex(g, 0, 2));
  EXPECT_TRUE(has_critical_vertex(g, 1, 1));
  EXPECT_EQ(critical_vertices(g), (std::set<std::pair<int, int>>{{0, 2}, {1, 0}, {1, 1}}));
}

TEST(Irreducible, Examples) {
  const Occupancy w = occ({1, 1, 1}, {1, 1, 1});
  EXPECT_TRUE(is_irreducible(SubstructureGamma(3, w, {ColumnSet{0}, ColumnSet{0}})));
  EXPECT_FALSE(is_irreducible(SubstructureGamma(3, w, {ColumnSet{0}, ColumnSet{0}}, {{1, 0}})));
  EXPECT_FALSE(is_irreducible(SubstructureGamma(3, w, {ColumnSet{0}, ColumnSet{0}}, {{1, 2}, {2, 0}})));
  EXPECT_TRUE(is_irreducible(SubstructureGamma(3, w, {ColumnSet{0}, ColumnSet{0}}, {{1, 2}})));
  EXPECT_TRUE(has_arrow_cycle(SubstructureGamma(3, w, {ColumnSet{0}, ColumnSet{0}}, {{1, 2}, {2, 1}})));
}

TEST(ClassifyColumns, Examples) {
  const SubstructureGamma all_d(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{0, 1, 2}, ColumnSet{0, 1, 2}});
  const ColumnTally t = classify_columns(all_d);
  EXPECT_EQ(t.count(ColumnType::D), 3);
  EXPECT_EQ(t.in_row(0, ColumnType::D), 3);
  EXPECT_EQ(t.count(ColumnType::A), 0);

  const SubstructureGamma ad(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}});
  const ColumnTally u = classify_columns(ad);
  EXPECT_EQ(u.count(ColumnType::A), 1);
  EXPECT_EQ(u.in_row(0, ColumnType::A), 1);
  EXPECT_EQ(u.in_row(1, ColumnType::D), 1);

  // Column 0 is a C column (marked in row 1 only); column 1, marked in row 1,
  // points into it.
  const SubstructureGamma c(3, occ({1, 0, 1}, {1, 1, 0}), {ColumnSet{2}, ColumnSet{0, 1}}, {{1, 0}});
  const ColumnTally v = classify_columns(c);
  EXPECT_EQ(v.count(ColumnType::C), 1);
  EXPECT_EQ(v.count(ColumnType::CTilde), 1);
  EXPECT_EQ(v.in_row(1, ColumnType::CTilde), 1);

  EXPECT_THROW(classify_columns(SubstructureGamma(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}}, {{0, 1}})),
               PreconditionError);
}

TEST(SubstructureGamma, Validation) {
  EXPECT_THROW(SubstructureGamma(2, occ({1, 1}, {1, 0}), {ColumnSet{0}, ColumnSet{0}}), PreconditionError);
  EXPECT_THROW(SubstructureGamma(2, occ({1, 1}, {1, 1}), {ColumnSet{0}, ColumnSet{0}}, {{0, 1}}), PreconditionError);
}

TEST(SubstructureOmega, FilledColumns) {
  const SubstructureOmega o(3, 1, 2, {2, 0, 1});
  EXPECT_EQ(o.vertices(), 3);
  EXPECT_EQ(o.filled_columns(), 2);
  EXPECT_THROW(SubstructureOmega(2, 3, 1, {1, 1}), PreconditionError);
}

TEST(SubstructureOf, RecoversConstraints) {
  const PairedArray base(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{0}}, Pairing({3, 2, 1, 0}));
  const ArrowedArray a(base, {{0, 1}});
  const SubstructureGamma g = substructure_of(a);
  EXPECT_EQ(g.arrows(), (ColumnMap{{0, 1}}));
  EXPECT_EQ(g.marks(1), ColumnSet{0});
  EXPECT_EQ(g.vertices(), 2);
}
