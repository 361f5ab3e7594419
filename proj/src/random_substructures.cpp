#include "mapenum/random_substructures.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "mapenum/transforms.hpp"

namespace mapenum::random {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ColumnSet nonempty_subset(Rng& rng, int columns, double rate) {
  ColumnSet out;
  for (int c = 0; c < columns; ++c) {
    if (coin(rng, rate)) out.insert(c);
  }
  if (out.empty()) out.insert(uniform(rng, 0, columns - 1));
  return out;
}

std::vector<int> scatter(Rng& rng, int columns, int vertices) {
  std::vector<int> w(static_cast<std::size_t>(columns), 0);
  for (int v = 0; v < vertices; ++v) ++w[static_cast<std::size_t>(uniform(rng, 0, columns - 1))];
  return w;
}

int type_a_columns(const SubstructureGamma& g) {
  int a = 0;
  for (int col = 0; col < g.columns(); ++col) {
    if (!g.has_arrow_tail(col) && !g.is_marked(0, col) && !g.is_marked(1, col)) ++a;
  }
  return a;
}

}  // namespace

GammaBranch branch_of(const SubstructureGamma& g) {
  const int a = type_a_columns(g);
  if (g.vertices() <= a) return GammaBranch::AtMostA;
  if (g.vertices() == a + 1) return GammaBranch::OneAboveA;
  return GammaBranch::General;
}

SubstructureGamma any_gamma(Rng& rng, int max_columns, int max_vertices, double arrow_rate) {
  const int K = uniform(rng, 1, max_columns);
  const int s = uniform(rng, 1, max_vertices);
  std::array<ColumnSet, 2> marks{nonempty_subset(rng, K, 0.35), nonempty_subset(rng, K, 0.35)};
  ColumnMap arrows;
  for (int col = 0; col < K; ++col) {
    if (!marks[0].contains(col) && coin(rng, arrow_rate)) arrows[col] = uniform(rng, 0, K - 1);
  }
  return SubstructureGamma(K, {scatter(rng, K, s), scatter(rng, K, s)}, std::move(marks), std::move(arrows));
}

std::optional<SubstructureGamma> irreducible_full_gamma(Rng& rng, int max_columns, int max_vertices) {
  const int K = uniform(rng, 1, max_columns);
  const int s = uniform(rng, 1, max_vertices);
  std::array<ColumnSet, 2> marks{nonempty_subset(rng, K, 0.4), nonempty_subset(rng, K, 0.4)};
  // Tails first; heads must then be row-0 unmarked columns without a tail.
  ColumnSet tails;
  for (int col = 0; col < K; ++col) {
    if (!marks[0].contains(col) && coin(rng, 0.35)) tails.insert(col);
  }
  std::vector<int> heads;
  for (int col = 0; col < K; ++col) {
    if (!marks[0].contains(col) && !tails.contains(col)) heads.push_back(col);
  }
  ColumnMap arrows;
  if (!heads.empty()) {
    for (int tail : tails) arrows[tail] = heads[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(heads.size()) - 1))];
  }
  Occupancy w{std::vector<int>(static_cast<std::size_t>(K), 0), std::vector<int>(static_cast<std::size_t>(K), 0)};
  for (int row = 0; row < 2; ++row) {
    int placed = 0;
    for (int col = 0; col < K; ++col) {
      const bool needs_vertex = !marks[row].contains(col) && (row == 1 || !arrows.contains(col));
      if (needs_vertex) {
        w[row][static_cast<std::size_t>(col)] = 1;
        ++placed;
      }
    }
    if (placed > s) return std::nullopt;
    for (int v = placed; v < s; ++v) ++w[row][static_cast<std::size_t>(uniform(rng, 0, K - 1))];
  }
  return SubstructureGamma(K, std::move(w), std::move(marks), std::move(arrows));
}

SubstructureGamma irreducible_full_gamma_at_most_a(Rng& rng, int max_columns, int max_vertices) {
  // Needs at least one extra column to carry the marks.
  const int K = uniform(rng, 2, max_columns);
  const int a = uniform(rng, 1, std::min(K - 1, max_vertices));
  Occupancy w{std::vector<int>(static_cast<std::size_t>(K), 0), std::vector<int>(static_cast<std::size_t>(K), 0)};
  std::array<ColumnSet, 2> marks;
  ColumnMap arrows;
  std::vector<int> order(static_cast<std::size_t>(K));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> a_columns(order.begin(), order.begin() + a);
  for (int col : a_columns) {
    w[0][static_cast<std::size_t>(col)] = 1;
    w[1][static_cast<std::size_t>(col)] = 1;
  }
  bool have_top_mark = false;
  for (int i = a; i < K; ++i) {
    const int col = order[static_cast<std::size_t>(i)];
    marks[1].insert(col);
    // Remaining columns are empty: either marked in both rows or pointing
    // into an A column with row 1 marked.
    const bool last_chance = i == K - 1 && !have_top_mark;
    if (last_chance || coin(rng, 0.5)) {
      marks[0].insert(col);
      have_top_mark = true;
    } else {
      arrows[col] = a_columns[static_cast<std::size_t>(uniform(rng, 0, a - 1))];
    }
  }
  return SubstructureGamma(K, std::move(w), std::move(marks), std::move(arrows));
}

SubstructureGamma arrowless_gamma(Rng& rng, int max_columns, int max_vertices, bool balanced) {
  const int K = uniform(rng, 1, max_columns);
  const int s = uniform(rng, 1, max_vertices);
  std::vector<int> top = scatter(rng, K, s);
  std::vector<int> bottom = balanced ? top : scatter(rng, K, s);
  return SubstructureGamma(K, {std::move(top), std::move(bottom)},
                           {nonempty_subset(rng, K, 0.35), nonempty_subset(rng, K, 0.35)});
}

std::optional<LemmaCase> to_mark_case(Rng& rng, int max_columns, int max_vertices) {
  SubstructureGamma base = any_gamma(rng, max_columns, max_vertices);
  std::vector<int> tails;
  for (int col = 0; col < base.columns(); ++col) {
    if (!base.is_marked(0, col)) tails.push_back(col);
  }
  if (tails.empty()) return std::nullopt;
  const int x = tails[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(tails.size()) - 1))];
  const std::vector<int> heads(base.marks(0).begin(), base.marks(0).end());
  const int y = heads[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(heads.size()) - 1))];
  ColumnMap arrows = base.arrows();
  arrows[x] = y;
  return LemmaCase{SubstructureGamma(base.columns(), base.occupancy(), {base.marks(0), base.marks(1)}, std::move(arrows)),
                   x, y};
}

std::optional<LemmaCase> retarget_case(Rng& rng, int max_columns, int max_vertices) {
  SubstructureGamma base = any_gamma(rng, max_columns, max_vertices);
  std::vector<int> unmarked;
  for (int col = 0; col < base.columns(); ++col) {
    if (!base.is_marked(0, col)) unmarked.push_back(col);
  }
  if (unmarked.size() < 2) return std::nullopt;
  std::shuffle(unmarked.begin(), unmarked.end(), rng);
  const int x = unmarked[0];
  const int y = unmarked[1];
  ColumnMap arrows = base.arrows();
  arrows[x] = y;
  if (!arrows.contains(y)) arrows[y] = uniform(rng, 0, base.columns() - 1);
  return LemmaCase{SubstructureGamma(base.columns(), base.occupancy(), {base.marks(0), base.marks(1)}, std::move(arrows)),
                   x, y};
}

std::optional<LemmaCase> pointing_case(Rng& rng, int max_columns, int max_vertices) {
  SubstructureGamma g = any_gamma(rng, max_columns, max_vertices);
  std::vector<int> xs;
  for (int col = 0; col < g.columns(); ++col) {
    if (has_critical_vertex(g, 0, col)) xs.push_back(col);
  }
  if (xs.empty()) return std::nullopt;
  const int x = xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
  std::vector<std::pair<int, int>> targets;
  for (int col = 0; col < g.columns(); ++col) {
    if (col == x) continue;
    const int w = g.occupancy(1, col);
    const int non_critical = g.is_marked(1, col) ? w : std::max(0, w - 1);
    for (int pos = 0; pos < non_critical; ++pos) targets.emplace_back(col, pos);
  }
  if (targets.empty()) return std::nullopt;
  const auto [y, pos] = targets[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(targets.size()) - 1))];
  return LemmaCase{std::move(g), x, y, pos};
}

std::optional<LemmaCase> merging_case(Rng& rng, int max_columns, int max_vertices) {
  SubstructureGamma g = any_gamma(rng, max_columns, max_vertices);
  if (!check_full(g) || g.columns() < 2) {
    // Top up empty cells so the full condition holds, keeping s fixed where
    // possible by moving vertices out of crowded cells.
    Occupancy w = g.occupancy();
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < g.columns(); ++col) {
        const bool needs = w[row][static_cast<std::size_t>(col)] == 0 && !g.is_marked(row, col) &&
                           (row == 1 || !g.has_arrow_tail(col));
        if (!needs) continue;
        auto donor = std::max_element(w[row].begin(), w[row].end());
        if (*donor < 2) return std::nullopt;
        --*donor;
        ++w[row][static_cast<std::size_t>(col)];
      }
    }
    g = SubstructureGamma(g.columns(), std::move(w), {g.marks(0), g.marks(1)}, g.arrows());
    if (!check_full(g) || g.columns() < 2) return std::nullopt;
  }
  std::vector<std::pair<int, int>> choices;
  for (int x = 0; x < g.columns(); ++x) {
    for (int y = 0; y < g.columns(); ++y) {
      if (x != y && has_critical_vertex(g, 0, x) && has_critical_vertex(g, 1, y)) choices.emplace_back(x, y);
    }
  }
  if (choices.empty()) return std::nullopt;
  const auto [x, y] = choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(choices.size()) - 1))];
  return LemmaCase{std::move(g), x, y};
}

}  // namespace mapenum::random
