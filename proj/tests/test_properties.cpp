#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mapenum/errors.hpp"
#include "mapenum/brute_force.hpp"
#include "mapenum/formulas.hpp"
#include "mapenum/random_substructures.hpp"
#include "mapenum/transforms.hpp"
#include "mapenum/verify.hpp"

using namespace mapenum;

namespace {

std::vector<int> random_permutation(random::Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST(Metamorphic, ColumnPermutationPreservesCountsAndConditions) {
  random::Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    const SubstructureGamma g = random::any_gamma(rng, 5, 5);
    const auto perm = random_permutation(rng, g.columns());
    const SubstructureGamma h = permute_columns(g, perm);
    EXPECT_EQ(brute::gamma_count_brute(g), brute::gamma_count_brute(h));
    EXPECT_EQ(check_nonempty(g), check_nonempty(h));
    EXPECT_EQ(check_balance(g), check_balance(h));
    EXPECT_EQ(check_full(g), check_full(h));
    EXPECT_EQ(is_irreducible(g), is_irreducible(h));
    if (is_irreducible(g)) {
      const ColumnTally a = classify_columns(g);
      const ColumnTally b = classify_columns(h);
      EXPECT_EQ(a.columns, b.columns);
      EXPECT_EQ(a.vertices, b.vertices);
    }
  }
}

TEST(Metamorphic, ColumnPermutationOfPairedArrays) {
  const TwoRowGround ground(4, 2);
  int seen = 0;
  brute::for_each_paired_surjection(3, 1, 0, 2, [&](const Pairing& mu, std::span<const int> pi) {
    const PairedArray a = labelled_to_canonical(ground, mu, pi, 3);
    for (const std::vector<int>& perm : {std::vector<int>{1, 2, 0}, std::vector<int>{2, 1, 0}}) {
      const PairedArray b = permute_columns(a, perm);
      EXPECT_EQ(check_nonempty(a), check_nonempty(b));
      EXPECT_EQ(check_balance(a), check_balance(b));
      EXPECT_EQ(check_forest(a), check_forest(b));
    }
    ++seen;
  });
  EXPECT_GT(seen, 0);
}

TEST(Oracles, GammaFastPathMatchesCheckerPath) {
  random::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const SubstructureGamma g = random::any_gamma(rng, 5, 5, 0.4);
    EXPECT_EQ(brute::gamma_count_brute(g), brute::gamma_count_brute_via_arrays(g));
  }
}

TEST(Oracles, ProperVerticalArraysPassAllCheckers) {
  // Every vertical array counted also passes the checkers directly; the
  // forest-only count on a balanced non-empty substructure is the proper count.
  random::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const SubstructureGamma g = random::arrowless_gamma(rng, 4, 4, true);
    if (!check_nonempty(g)) continue;
    EXPECT_TRUE(check_balance(g));
    EXPECT_EQ(brute::gamma_count_brute(g), brute::gamma_count_brute_via_arrays(g));
  }
}

TEST(Arrays, FullImpliesNonempty) {
  random::Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const SubstructureGamma g = random::any_gamma(rng, 6, 6);
    if (check_full(g)) EXPECT_TRUE(check_nonempty(g));
  }
}

TEST(Arrays, TallyRowsSumToS) {
  random::Rng rng(13);
  int checked = 0;
  while (checked < 200) {
    const auto g = random::irreducible_full_gamma(rng, 6, 7);
    if (!g) continue;
    ++checked;
    const ColumnTally t = classify_columns(*g);
    for (int row = 0; row < 2; ++row) {
      long sum = 0;
      for (long v : t.vertices[row]) sum += v;
      EXPECT_EQ(sum, g->vertices());
    }
    for (const auto& [tail, head] : g->arrows()) {
      EXPECT_TRUE(has_critical_vertex(*g, 0, head)) << "head " << head;
    }
  }
}

TEST(Transforms, RandomClosureOrdersAgree) {
  random::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const SubstructureGamma g = random::any_gamma(rng, 5, 5, 0.7);
    const ClosureResult a = irreducible_closure(g);
    const ClosureResult b = irreducible_closure(g, rng);
    ASSERT_EQ(a.index(), b.index());
    if (std::holds_alternative<SubstructureGamma>(a)) {
      EXPECT_TRUE(is_irreducible(std::get<SubstructureGamma>(b)));
      EXPECT_EQ(classify_columns(std::get<SubstructureGamma>(a)), classify_columns(std::get<SubstructureGamma>(b)));
    } else {
      EXPECT_EQ(brute::gamma_count_brute(g), 0);
    }
  }
}

TEST(Formulas, TwoVertexSeriesIntegralBeyondBruteRange) {
  for (int q1 = 0; q1 <= 4; ++q1) {
    for (int q2 = 0; q2 <= 4; ++q2) {
      for (int s = 1; s <= 4; ++s) {
        const int d = q1 + q2 + s;
        const CycleCountVector v = series_cycle_counts(gs_series(q1, q2, s), d);
        EXPECT_NO_THROW(genus_counts(v, 2, d));
        EXPECT_EQ(gs_series(q1, q2, s), gs_series_simplified(q1, q2, s));
      }
    }
  }
}

TEST(Formulas, GammaFormulaRandomSweepWithOtherSeed) {
  verify::SweepOptions o;
  o.seed = 12345;
  o.gamma_instances = 150;
  const verify::SweepReport r = verify::gamma_vs_brute(o);
  EXPECT_TRUE(r.passed()) << r.counterexample.value_or("");
}

TEST(Verify, ReportsAreDeterministic) {
  const auto opts = verify::SweepOptions::with_max_d(3, 42);
  const auto a = verify::run_suite("lemmas", opts);
  const auto b = verify::run_suite("lemmas", opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].checks, b[i].checks);
    EXPECT_EQ(a[i].coverage, b[i].coverage);
    EXPECT_TRUE(a[i].passed()) << a[i].name << ": " << a[i].counterexample.value_or("");
  }
  EXPECT_THROW(verify::run_suite("nope", opts), PreconditionError);
}
