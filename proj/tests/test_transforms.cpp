#include <gtest/gtest.h>

#include "mapenum/errors.hpp"
#include "mapenum/brute_force.hpp"
#include "mapenum/transforms.hpp"

using namespace mapenum;

namespace {

Occupancy occ(std::vector<int> top, std::vector<int> bottom) { return {std::move(top), std::move(bottom)}; }

}  // namespace

TEST(ArrowToMark, MarksTailAndDropsArrow) {
  const SubstructureGamma g(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{2}, ColumnSet{2}}, {{0, 2}});
  const SubstructureGamma h = arrow_simplify_to_mark(g, 0);
  EXPECT_EQ(h.marks(0), (ColumnSet{0, 2}));
  EXPECT_TRUE(h.arrows().empty());
  EXPECT_EQ(brute::gamma_count_brute(g), brute::gamma_count_brute(h));
  EXPECT_THROW(arrow_simplify_to_mark(g, 1), PreconditionError);
  const SubstructureGamma unmarked_head(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{2}, ColumnSet{2}}, {{0, 1}});
  EXPECT_THROW(arrow_simplify_to_mark(unmarked_head, 0), PreconditionError);
}

TEST(ArrowRetarget, ShortcutsChain) {
  const SubstructureGamma g(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{2}, ColumnSet{2}}, {{0, 1}, {1, 2}});
  const SubstructureGamma h = arrow_simplify_retarget(g, 0);
  EXPECT_EQ(h.arrows(), (ColumnMap{{0, 2}, {1, 2}}));
  EXPECT_EQ(brute::gamma_count_brute(g), brute::gamma_count_brute(h));
  EXPECT_THROW(arrow_simplify_retarget(h, 1), PreconditionError);
}

TEST(ArrowRetarget, TwoCycleBecomesSelfLoop) {
  const SubstructureGamma g(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{2}, ColumnSet{2}}, {{0, 1}, {1, 0}});
  const SubstructureGamma h = arrow_simplify_retarget(g, 0);
  EXPECT_EQ(h.arrows().at(0), 0);
  EXPECT_TRUE(has_arrow_cycle(h));
  EXPECT_EQ(brute::gamma_count_brute(h), 0);
}

TEST(IrreducibleClosure, Examples) {
  const SubstructureGamma plain(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}});
  EXPECT_EQ(std::get<SubstructureGamma>(irreducible_closure(plain)), plain);

  const SubstructureGamma cyclic(3, occ({1, 1, 1}, {1, 1, 1}), {ColumnSet{2}, ColumnSet{2}}, {{0, 1}, {1, 0}});
  EXPECT_TRUE(std::holds_alternative<CycleDetected>(irreducible_closure(cyclic)));

  // A chain ending in a marked column collapses completely into marks.
  const SubstructureGamma chain(4, occ({1, 1, 1, 1}, {1, 1, 1, 1}), {ColumnSet{3}, ColumnSet{3}},
                                {{0, 1}, {1, 2}, {2, 3}});
  const auto closed = std::get<SubstructureGamma>(irreducible_closure(chain));
  EXPECT_TRUE(is_irreducible(closed));
  EXPECT_TRUE(closed.arrows().empty());
  EXPECT_EQ(closed.marks(0), (ColumnSet{0, 1, 2, 3}));
  EXPECT_EQ(brute::gamma_count_brute(closed), brute::gamma_count_brute(chain));
}

TEST(ColumnPointing, ReplacesPairByArrow) {
  // (1, 1) holds two vertices, so its first vertex is not critical.
  const SubstructureGamma g(2, occ({1, 2}, {1, 2}), {ColumnSet{1}, ColumnSet{1}});
  const SubstructureGamma h = column_pointing(g, 0, 1, 0);
  EXPECT_EQ(h.occupancy(), occ({0, 2}, {1, 1}));
  EXPECT_EQ(h.arrows(), (ColumnMap{{0, 1}}));
  EXPECT_EQ(h.vertices(), 2);
  EXPECT_TRUE(check_nonempty(h));  // X keeps its arrow-tail
  EXPECT_EQ(brute::gamma_count_brute(g, brute::FixedPair{0, 0, 1, 0}), brute::gamma_count_brute(h));
}

TEST(ColumnPointing, RejectsBadArguments) {
  const SubstructureGamma g(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{1}});
  EXPECT_THROW(column_pointing(g, 0, 0), PreconditionError);
  EXPECT_THROW(column_pointing(g, 1, 0), PreconditionError);     // v sits in a marked cell
  const SubstructureGamma h(2, occ({1, 1}, {1, 1}), {ColumnSet{1}, ColumnSet{0}});
  EXPECT_THROW(column_pointing(h, 0, 1, 0), PreconditionError);  // u is critical
}

TEST(ColumnMerging, MergesAndRedirects) {
  const SubstructureGamma f(3, occ({1, 1, 0}, {1, 1, 0}), {ColumnSet{2}, ColumnSet{2}}, {});
  const SubstructureGamma m = column_merging(f, 0, 1);
  EXPECT_EQ(m.columns(), 2);
  EXPECT_EQ(m.occupancy(), occ({1, 0}, {1, 0}));
  EXPECT_TRUE(check_full(m));
  EXPECT_EQ(brute::gamma_count_brute(f, brute::FixedPair{0, 0, 1, 0}), brute::gamma_count_brute(m));
}

TEST(ColumnMerging, ArrowIntoYIsRedirectedToX) {
  // Columns: 0 = X (A type), 1 = Y (A type), 2 = tail into Y marked below, 3 = D.
  const SubstructureGamma g(4, occ({1, 1, 0, 1}, {1, 1, 1, 0}), {ColumnSet{3}, ColumnSet{2, 3}}, {{2, 1}});
  ASSERT_TRUE(check_full(g));
  const SubstructureGamma m = column_merging(g, 0, 1);
  EXPECT_EQ(m.columns(), 3);
  EXPECT_EQ(m.arrows(), (ColumnMap{{1, 0}}));
  EXPECT_EQ(m.marks(1), (ColumnSet{1, 2}));
  EXPECT_EQ(brute::gamma_count_brute(g, brute::FixedPair{0, 0, 1, 0}), brute::gamma_count_brute(m));
}

TEST(ColumnMerging, RequiresFullCondition) {
  const SubstructureGamma g(3, occ({1, 1, 0}, {1, 1, 0}), {ColumnSet{0}, ColumnSet{1}});
  EXPECT_THROW(column_merging(g, 1, 0), PreconditionError);
}

TEST(LabelledToCanonical, WorkedExample) {
  // K = 4, q = (3, 1), s = 4: p1 = 10, p2 = 6. Labels are 1-based in each row.
  const TwoRowGround ground(10, 6);
  auto top = [&](int label) { return ground.index(0, label - 1); };
  auto bottom = [&](int label) { return ground.index(1, label - 1); };
  const std::vector<std::pair<int, int>> pairs{{top(1), bottom(4)}, {top(2), top(3)},    {top(4), bottom(3)},
                                               {top(5), top(7)},    {top(6), bottom(1)}, {top(8), bottom(5)},
                                               {top(9), top(10)},   {bottom(2), bottom(6)}};
  const Pairing mu = Pairing::from_pairs(16, pairs);
  std::vector<int> pi(16);
  for (int l : {2, 4}) pi[top(l)] = 0;
  for (int l : {3, 5, 8}) pi[top(l)] = 1;
  for (int l : {1, 9, 10}) pi[top(l)] = 2;
  for (int l : {6, 7}) pi[top(l)] = 3;
  pi[bottom(4)] = 0;
  for (int l : {3, 6}) pi[bottom(l)] = 1;
  pi[bottom(5)] = 2;
  for (int l : {1, 2}) pi[bottom(l)] = 3;

  const PairedArray a = labelled_to_canonical(ground, mu, pi, 4);
  EXPECT_EQ(a.marks(0), ColumnSet{2});
  EXPECT_EQ(a.marks(1), ColumnSet{3});
  EXPECT_EQ(a.row_occupancy(0), (std::vector<int>{2, 3, 3, 2}));
  EXPECT_EQ(a.row_occupancy(1), (std::vector<int>{1, 2, 1, 2}));
  EXPECT_EQ(a.mixed_pairs(), 4);
  EXPECT_TRUE(check_nonempty(a));
  EXPECT_TRUE(check_balance(a));
  EXPECT_TRUE(check_forest(a));

  // Breaking the constraint is rejected.
  pi[top(2)] = 1;
  EXPECT_THROW(labelled_to_canonical(ground, mu, pi, 4), PreconditionError);
}

TEST(LabelledToCanonical, SingleEdge) {
  const TwoRowGround ground(1, 1);
  const std::vector<int> pi{0, 0};
  const PairedArray a = labelled_to_canonical(ground, Pairing({1, 0}), pi, 1);
  EXPECT_EQ(a.marks(0), ColumnSet{0});
  EXPECT_EQ(a.marks(1), ColumnSet{0});
  EXPECT_EQ(a.mixed_pairs(), 1);
  const std::vector<int> not_onto{0, 0};
  EXPECT_THROW(labelled_to_canonical(ground, Pairing({1, 0}), not_onto, 2), PreconditionError);
}
