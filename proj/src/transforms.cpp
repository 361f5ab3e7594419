#include "mapenum/transforms.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

int head_of(const SubstructureGamma& g, int x, const char* who) {
  auto it = g.arrows().find(x);
  require(it != g.arrows().end(), std::string(who) + ": column " + std::to_string(x) + " has no arrow");
  return it->second;
}

// Columns whose arrow can be simplified by one of the two lemmas.
std::vector<int> reducible_tails(const SubstructureGamma& g) {
  std::vector<int> tails;
  for (const auto& [tail, head] : g.arrows()) {
    if (g.is_marked(0, head) || g.has_arrow_tail(head)) tails.push_back(tail);
  }
  return tails;
}

SubstructureGamma simplify_at(const SubstructureGamma& g, int tail) {
  const int head = g.arrows().at(tail);
  return g.is_marked(0, head) ? arrow_simplify_to_mark(g, tail) : arrow_simplify_retarget(g, tail);
}

template <typename Pick>
ClosureResult close(const SubstructureGamma& g, Pick pick) {
  if (has_arrow_cycle(g)) return CycleDetected{};
  SubstructureGamma current = g;
  // Each step removes an arrow or shortens the path from its tail to a
  // terminal column, so the loop ends.
  for (std::vector<int> tails = reducible_tails(current); !tails.empty(); tails = reducible_tails(current)) {
    current = simplify_at(current, pick(tails));
  }
  return current;
}

}  // namespace

SubstructureGamma arrow_simplify_to_mark(const SubstructureGamma& g, int x) {
  const int y = head_of(g, x, "arrow_simplify_to_mark");
  require(g.is_marked(0, y), "arrow_simplify_to_mark: head column must be marked in row 0");
  std::array<ColumnSet, 2> marks{g.marks(0), g.marks(1)};
  marks[0].insert(x);
  ColumnMap arrows = g.arrows();
  arrows.erase(x);
  return SubstructureGamma(g.columns(), g.occupancy(), std::move(marks), std::move(arrows));
}

SubstructureGamma arrow_simplify_retarget(const SubstructureGamma& g, int x) {
  const int y = head_of(g, x, "arrow_simplify_retarget");
  require(g.has_arrow_tail(y), "arrow_simplify_retarget: head column must itself point somewhere");
  ColumnMap arrows = g.arrows();
  arrows[x] = g.arrows().at(y);
  return SubstructureGamma(g.columns(), g.occupancy(), {g.marks(0), g.marks(1)}, std::move(arrows));
}

ClosureResult irreducible_closure(const SubstructureGamma& g) {
  return close(g, [](const std::vector<int>& tails) { return tails.front(); });
}

ClosureResult irreducible_closure(const SubstructureGamma& g, std::mt19937_64& rng) {
  return close(g, [&rng](const std::vector<int>& tails) {
    std::uniform_int_distribution<std::size_t> pick(0, tails.size() - 1);
    return tails[pick(rng)];
  });
}

SubstructureGamma column_pointing(const SubstructureGamma& g, int x, int y, int bottom_position) {
  const int K = g.columns();
  require(x >= 0 && x < K && y >= 0 && y < K, "column_pointing: column out of range");
  require(x != y, "column_pointing: X and Y must differ");
  require(has_critical_vertex(g, 0, x), "column_pointing: (0, X) must end in a critical vertex");
  require(bottom_position >= 0 && bottom_position < g.occupancy(1, y),
          "column_pointing: (1, Y) has no vertex at the given position");
  const bool u_critical = !g.is_marked(1, y) && bottom_position == g.occupancy(1, y) - 1;
  require(!u_critical, "column_pointing: the vertex u in (1, Y) must not be critical");
  Occupancy w = g.occupancy();
  --w[0][static_cast<std::size_t>(x)];
  --w[1][static_cast<std::size_t>(y)];
  ColumnMap arrows = g.arrows();
  arrows[x] = y;
  return SubstructureGamma(K, std::move(w), {g.marks(0), g.marks(1)}, std::move(arrows));
}

SubstructureGamma column_merging(const SubstructureGamma& g, int x, int y) {
  const int K = g.columns();
  require(x >= 0 && x < K && y >= 0 && y < K, "column_merging: column out of range");
  require(x != y, "column_merging: X and Y must differ");
  require(K >= 2, "column_merging: needs at least two columns");
  require(check_full(g), "column_merging: the substructure must satisfy the full condition");
  require(has_critical_vertex(g, 0, x), "column_merging: (0, X) must end in a critical vertex");
  require(has_critical_vertex(g, 1, y), "column_merging: (1, Y) must end in a critical vertex");

  // Y is moved to the last index and dropped; later columns shift down.
  auto renumber = [y, x](int col) {
    if (col == y) col = x;
    return col > y ? col - 1 : col;
  };

  Occupancy w{std::vector<int>(), std::vector<int>()};
  std::array<ColumnSet, 2> marks;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < K; ++col) {
      if (col == y) continue;
      int count = g.occupancy(row, col);
      if (col == x) count += g.occupancy(row, y) - 1;
      w[row].push_back(count);
    }
    for (int col : g.marks(row)) marks[row].insert(renumber(col));
  }
  ColumnMap arrows;
  for (const auto& [tail, head] : g.arrows()) arrows[renumber(tail)] = renumber(head);
  return SubstructureGamma(K - 1, std::move(w), std::move(marks), std::move(arrows));
}

PairedArray labelled_to_canonical(const TwoRowGround& ground, const Pairing& mu, std::span<const int> pi, int K) {
  const int n = ground.size();
  require(K >= 1, "labelled_to_canonical: K must be positive");
  require(mu.ground_size() == n && static_cast<int>(pi.size()) == n,
          "labelled_to_canonical: mu and pi must cover [p1, p2]");
  require(ground.p1 >= 1 && ground.p2 >= 1, "labelled_to_canonical: both rows need a label 1");
  std::vector<char> hit(static_cast<std::size_t>(K), 0);
  for (int v : pi) {
    require(v >= 0 && v < K, "labelled_to_canonical: pi value out of range");
    hit[static_cast<std::size_t>(v)] = 1;
  }
  require(std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; }),
          "labelled_to_canonical: pi must be surjective");
  const std::vector<int> gamma = ground.canonical_cycle();
  for (int v = 0; v < n; ++v) {
    require(pi[static_cast<std::size_t>(mu.partner(v))] == pi[static_cast<std::size_t>(gamma[static_cast<std::size_t>(v)])],
            "labelled_to_canonical: pi(mu(v)) != pi(gamma(v)) at element " + std::to_string(v));
  }

  Occupancy w{std::vector<int>(static_cast<std::size_t>(K), 0), std::vector<int>(static_cast<std::size_t>(K), 0)};
  for (int v = 0; v < n; ++v) ++w[ground.row_of(v)][static_cast<std::size_t>(pi[static_cast<std::size_t>(v)])];
  // Slot of each label: cells in column order, labels ascending within a cell.
  std::array<std::vector<int>, 2> next_slot;
  int offset = 0;
  for (int row = 0; row < 2; ++row) {
    next_slot[row].resize(static_cast<std::size_t>(K));
    for (int col = 0; col < K; ++col) {
      next_slot[row][static_cast<std::size_t>(col)] = offset;
      offset += w[row][static_cast<std::size_t>(col)];
    }
  }
  std::vector<int> slot_of(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    slot_of[static_cast<std::size_t>(v)] = next_slot[ground.row_of(v)][static_cast<std::size_t>(pi[static_cast<std::size_t>(v)])]++;
  }
  std::vector<int> partner(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    partner[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(v)])] = slot_of[static_cast<std::size_t>(mu.partner(v))];
  }
  std::array<ColumnSet, 2> marks{ColumnSet{pi[static_cast<std::size_t>(ground.index(0, 0))]},
                                 ColumnSet{pi[static_cast<std::size_t>(ground.index(1, 0))]}};
  return PairedArray(K, std::move(w), std::move(marks), Pairing(std::move(partner)));
}

}  // namespace mapenum
