#include "mapenum/brute_force.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <string>

namespace mapenum::brute {

namespace {

void extend_pairing(std::vector<int>& partner, int from, const PartnerVisitor& visit) {
  const int n = static_cast<int>(partner.size());
  int first = from;
  while (first < n && partner[static_cast<std::size_t>(first)] != -1) ++first;
  if (first == n) {
    visit(partner);
    return;
  }
  for (int other = first + 1; other < n; ++other) {
    if (partner[static_cast<std::size_t>(other)] != -1) continue;
    partner[static_cast<std::size_t>(first)] = other;
    partner[static_cast<std::size_t>(other)] = first;
    extend_pairing(partner, first + 1, visit);
    partner[static_cast<std::size_t>(first)] = -1;
    partner[static_cast<std::size_t>(other)] = -1;
  }
}

using Histogram = std::vector<std::uint64_t>;

// Cycle histogram over one slice of the pairing stream, optionally
// filtered to pairings with a given number of mixed pairs.
Histogram face_histogram(int ground_size, int first_partner, const std::vector<int>& gamma,
                         std::optional<std::pair<int, int>> mixed_filter) {
  const std::vector<int> gamma_inv = inverse(gamma);
  Histogram counts(static_cast<std::size_t>(ground_size) + 2, 0);
  std::vector<int> face(static_cast<std::size_t>(ground_size));
  for_each_pairing_with_first_partner(ground_size, first_partner, [&](std::span<const int> partner) {
    if (mixed_filter) {
      const auto [row_split, wanted] = *mixed_filter;
      int mixed = 0;
      for (int i = 0; i < row_split; ++i) mixed += partner[static_cast<std::size_t>(i)] >= row_split ? 1 : 0;
      if (mixed != wanted) return;
    }
    for (std::size_t i = 0; i < face.size(); ++i) face[i] = partner[static_cast<std::size_t>(gamma_inv[i])];
    ++counts[static_cast<std::size_t>(cycle_count(face))];
  });
  return counts;
}

Histogram sharded_histogram(int ground_size, const std::vector<int>& gamma,
                            std::optional<std::pair<int, int>> mixed_filter, int workers) {
  Histogram total(static_cast<std::size_t>(ground_size) + 2, 0);
  auto accumulate_into = [&total](const Histogram& part) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
  };
  if (workers <= 1) {
    for (int first = 1; first < ground_size; ++first) {
      accumulate_into(face_histogram(ground_size, first, gamma, mixed_filter));
    }
    return total;
  }
  // Shards are summed in first-partner order, so the result does not depend
  // on scheduling.
  std::vector<std::future<Histogram>> shards;
  for (int first = 1; first < ground_size; ++first) {
    shards.push_back(std::async(std::launch::async, face_histogram, ground_size, first, std::cref(gamma),
                                mixed_filter));
    if (static_cast<int>(shards.size()) >= workers) {
      for (auto& shard : shards) accumulate_into(shard.get());
      shards.clear();
    }
  }
  for (auto& shard : shards) accumulate_into(shard.get());
  return total;
}

CycleCountVector to_cycle_counts(int pairs, const Histogram& histogram) {
  CycleCountVector out(pairs);
  for (std::size_t cycles = 0; cycles < histogram.size(); ++cycles) {
    if (histogram[cycles] == 0) continue;
    out.add(static_cast<int>(cycles), BigInt(static_cast<unsigned long>(histogram[cycles])));
  }
  return out;
}

bool rooted(const std::vector<int>& psi, const std::vector<char>& root) {
  const int columns = static_cast<int>(psi.size());
  for (int start = 0; start < columns; ++start) {
    if (psi[static_cast<std::size_t>(start)] < 0) continue;
    int current = psi[static_cast<std::size_t>(start)];
    int steps = 0;
    while (!root[static_cast<std::size_t>(current)]) {
      current = psi[static_cast<std::size_t>(current)];
      if (current < 0 || ++steps > columns) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_pairing(int ground_size, const PartnerVisitor& visit) {
  require(ground_size >= 0 && ground_size % 2 == 0, "for_each_pairing: ground size must be even");
  if (ground_size == 0) {
    visit(std::span<const int>());
    return;
  }
  for (int first = 1; first < ground_size; ++first) for_each_pairing_with_first_partner(ground_size, first, visit);
}

void for_each_pairing_with_first_partner(int ground_size, int first_partner, const PartnerVisitor& visit) {
  require(ground_size >= 2 && ground_size % 2 == 0, "for_each_pairing: ground size must be even and positive");
  require(first_partner >= 1 && first_partner < ground_size, "for_each_pairing: first partner out of range");
  std::vector<int> partner(static_cast<std::size_t>(ground_size), -1);
  partner[0] = first_partner;
  partner[static_cast<std::size_t>(first_partner)] = 0;
  extend_pairing(partner, 1, visit);
}

std::vector<Pairing> enumerate_pairings_one_row(int q) {
  require(q >= 0, "enumerate_pairings_one_row: q must be non-negative");
  std::vector<Pairing> out;
  for_each_pairing(2 * q, [&](std::span<const int> partner) {
    out.emplace_back(std::vector<int>(partner.begin(), partner.end()));
  });
  return out;
}

std::vector<Pairing> enumerate_two_row_pairings(int q1, int q2, int s) {
  require(q1 >= 0 && q2 >= 0 && s >= 0, "enumerate_two_row_pairings: parameters must be non-negative");
  const TwoRowGround ground(2 * q1 + s, 2 * q2 + s);
  std::vector<Pairing> out;
  for_each_pairing(ground.size(), [&](std::span<const int> partner) {
    int mixed = 0;
    for (int i = 0; i < ground.p1; ++i) mixed += ground.is_mixed(i, partner[static_cast<std::size_t>(i)]) ? 1 : 0;
    if (mixed == s) out.emplace_back(std::vector<int>(partner.begin(), partner.end()));
  });
  return out;
}

CycleCountVector hz_counts_brute(int q, int workers) {
  require(q >= 1, "hz_counts_brute: q must be positive");
  const int n = 2 * q;
  return to_cycle_counts(q, sharded_histogram(n, single_cycle(n), std::nullopt, workers));
}

CycleCountVector gs_counts_brute(int q1, int q2, int s, int workers) {
  require(q1 >= 0 && q2 >= 0, "gs_counts_brute: q1, q2 must be non-negative");
  require(s >= 1, "gs_counts_brute: s must be positive");
  const TwoRowGround ground(2 * q1 + s, 2 * q2 + s);
  const int pairs = q1 + q2 + s;
  return to_cycle_counts(pairs, sharded_histogram(ground.size(), ground.canonical_cycle(),
                                                  std::make_pair(ground.p1, s), workers));
}

void for_each_paired_surjection(int K, int q1, int q2, int s, const SurjectionVisitor& visit) {
  require(K >= 1, "paired surjections: K must be positive");
  require(q1 >= 0 && q2 >= 0 && s >= 1, "paired surjections: need q1, q2 >= 0 and s >= 1");
  const TwoRowGround ground(2 * q1 + s, 2 * q2 + s);
  const int n = ground.size();
  const std::vector<int> gamma = ground.canonical_cycle();
  for (const Pairing& mu : enumerate_two_row_pairings(q1, q2, s)) {
    // Constraint pi(mu(v)) = pi(gamma(v)) becomes checkable once the larger
    // of its two endpoints is assigned.
    std::vector<std::vector<std::pair<int, int>>> checks(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int a = mu.partner(v);
      const int b = gamma[static_cast<std::size_t>(v)];
      checks[static_cast<std::size_t>(std::max(a, b))].emplace_back(a, b);
    }
    std::vector<int> pi(static_cast<std::size_t>(n), -1);
    std::vector<int> uses(static_cast<std::size_t>(K), 0);
    int distinct = 0;
    std::function<void(int)> assign = [&](int v) {
      if (K - distinct > n - v) return;
      if (v == n) {
        if (distinct == K) visit(mu, pi);
        return;
      }
      for (int c = 0; c < K; ++c) {
        pi[static_cast<std::size_t>(v)] = c;
        bool ok = true;
        for (const auto& [a, b] : checks[static_cast<std::size_t>(v)]) {
          if (pi[static_cast<std::size_t>(a)] != pi[static_cast<std::size_t>(b)]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        if (uses[static_cast<std::size_t>(c)]++ == 0) ++distinct;
        assign(v + 1);
        if (--uses[static_cast<std::size_t>(c)] == 0) --distinct;
      }
      pi[static_cast<std::size_t>(v)] = -1;
    };
    assign(0);
  }
}

BigInt paired_surjection_count_brute(int K, int q1, int q2, int s) {
  std::uint64_t total = 0;
  for_each_paired_surjection(K, q1, q2, s, [&total](const Pairing&, std::span<const int>) { ++total; });
  return BigInt(static_cast<unsigned long>(total));
}

BigInt canonical_array_count_brute(int K, int q1, int q2, int s) {
  require(K >= 1, "canonical_array_count_brute: K must be positive");
  require(q1 >= 0 && q2 >= 0 && s >= 1, "canonical_array_count_brute: need q1, q2 >= 0 and s >= 1");
  const int p1 = 2 * q1 + s;
  const int p2 = 2 * q2 + s;
  const std::vector<Pairing> pairings = enumerate_two_row_pairings(q1, q2, s);
  const auto columns = static_cast<std::size_t>(K);
  std::uint64_t total = 0;
  std::vector<int> slot_column(static_cast<std::size_t>(p1 + p2));
  std::array<std::vector<int>, 2> rightmost;
  std::array<std::vector<int>, 2> mixed;
  std::array<std::vector<int>, 2> psi;
  std::array<std::vector<char>, 2> good_root;
  std::vector<char> root(columns);
  for (int row = 0; row < 2; ++row) {
    mixed[row].resize(columns);
    psi[row].resize(columns);
    good_root[row].resize(columns);
  }
  for_each_weak_composition(p1, K, [&](std::span<const int> top) {
    for_each_weak_composition(p2, K, [&](std::span<const int> bottom) {
      // A column empty in both rows needs a mark, and there are only two.
      int empty = 0;
      for (std::size_t c = 0; c < columns; ++c) empty += (top[c] == 0 && bottom[c] == 0) ? 1 : 0;
      if (empty > 2) return;
      int next = 0;
      for (int row = 0; row < 2; ++row) {
        const std::span<const int> w = row == 0 ? top : bottom;
        rightmost[row].assign(columns, -1);
        for (std::size_t c = 0; c < columns; ++c) {
          for (int pos = 0; pos < w[c]; ++pos) slot_column[static_cast<std::size_t>(next++)] = static_cast<int>(c);
          if (w[c] > 0) rightmost[row][c] = next - 1;
        }
      }
      for (const Pairing& mu : pairings) {
        for (int row = 0; row < 2; ++row) std::fill(mixed[row].begin(), mixed[row].end(), 0);
        for (int v = 0; v < p1 + p2; ++v) {
          const int row = v < p1 ? 0 : 1;
          if ((mu.partner(v) < p1 ? 0 : 1) != row) ++mixed[row][static_cast<std::size_t>(slot_column[static_cast<std::size_t>(v)])];
        }
        if (mixed[0] != mixed[1]) continue;
        for (int row = 0; row < 2; ++row) {
          for (std::size_t c = 0; c < columns; ++c) {
            const int r = rightmost[row][c];
            psi[row][c] = r < 0 ? -1 : slot_column[static_cast<std::size_t>(mu.partner(r))];
          }
          // Marks in different rows act independently on the forest
          // condition, so test each candidate root once per row.
          for (std::size_t m = 0; m < columns; ++m) {
            std::fill(root.begin(), root.end(), 0);
            root[m] = 1;
            const int saved = psi[row][m];
            psi[row][m] = -1;
            good_root[row][m] = rooted(psi[row], root) ? 1 : 0;
            psi[row][m] = saved;
          }
        }
        for (int mark_top = 0; mark_top < K; ++mark_top) {
          if (!good_root[0][static_cast<std::size_t>(mark_top)]) continue;
          for (int mark_bottom = 0; mark_bottom < K; ++mark_bottom) {
            if (!good_root[1][static_cast<std::size_t>(mark_bottom)]) continue;
            bool nonempty = true;
            for (int c = 0; c < K && nonempty; ++c) {
              const auto cc = static_cast<std::size_t>(c);
              nonempty = top[cc] > 0 || bottom[cc] > 0 || c == mark_top || c == mark_bottom;
            }
            if (nonempty) ++total;
          }
        }
      }
    });
  });
  return BigInt(static_cast<unsigned long>(total));
}

BigInt canonical_array_count_brute_via_arrays(int K, int q1, int q2, int s) {
  require(K >= 1, "canonical_array_count_brute_via_arrays: K must be positive");
  require(q1 >= 0 && q2 >= 0 && s >= 1, "canonical_array_count_brute_via_arrays: need q1, q2 >= 0 and s >= 1");
  const int p1 = 2 * q1 + s;
  const int p2 = 2 * q2 + s;
  const std::vector<Pairing> pairings = enumerate_two_row_pairings(q1, q2, s);
  std::uint64_t total = 0;
  for (int mark_top = 0; mark_top < K; ++mark_top) {
    for (int mark_bottom = 0; mark_bottom < K; ++mark_bottom) {
      for_each_weak_composition(p1, K, [&](std::span<const int> top) {
        for_each_weak_composition(p2, K, [&](std::span<const int> bottom) {
          for (int col = 0; col < K; ++col) {
            const auto c = static_cast<std::size_t>(col);
            if (top[c] == 0 && bottom[c] == 0 && col != mark_top && col != mark_bottom) return;
          }
          const Occupancy w{std::vector<int>(top.begin(), top.end()), std::vector<int>(bottom.begin(), bottom.end())};
          for (const Pairing& mu : pairings) {
            const PairedArray array(K, w, {ColumnSet{mark_top}, ColumnSet{mark_bottom}}, mu);
            if (check_nonempty(array) && check_balance(array) && check_forest(array)) ++total;
          }
        });
      });
    }
  }
  return BigInt(static_cast<unsigned long>(total));
}

BigInt vertical_array_count_brute(int K, int R1, int R2, int s) {
  require(K >= 1 && R1 >= 1 && R2 >= 1 && s >= 1, "vertical_array_count_brute: parameters must be positive");
  std::uint64_t total = 0;
  for_each_weak_composition(s, K, [&](std::span<const int> w_span) {
    const std::vector<int> w(w_span.begin(), w_span.end());
    for_each_subset(K, R1, [&](const ColumnSet& top_marks) {
      for_each_subset(K, R2, [&](const ColumnSet& bottom_marks) {
        std::vector<int> matching(static_cast<std::size_t>(s));
        std::iota(matching.begin(), matching.end(), 0);
        do {
          std::vector<int> partner(static_cast<std::size_t>(2 * s));
          for (int i = 0; i < s; ++i) {
            partner[static_cast<std::size_t>(i)] = s + matching[static_cast<std::size_t>(i)];
            partner[static_cast<std::size_t>(s + matching[static_cast<std::size_t>(i)])] = i;
          }
          const PairedArray array(K, {w, w}, {top_marks, bottom_marks}, Pairing(std::move(partner)));
          if (check_nonempty(array) && check_balance(array) && check_forest(array)) ++total;
        } while (std::next_permutation(matching.begin(), matching.end()));
      });
    });
  });
  return BigInt(static_cast<unsigned long>(total));
}

BigInt gamma_count_brute(const SubstructureGamma& g, std::optional<FixedPair> fixed) {
  const int K = g.columns();
  const int s = g.vertices();
  std::array<std::vector<int>, 2> slot_column;
  std::array<std::vector<int>, 2> rightmost;
  std::array<std::vector<int>, 2> cell_start;
  std::array<std::vector<char>, 2> root;
  for (int row = 0; row < 2; ++row) {
    rightmost[row].assign(static_cast<std::size_t>(K), -1);
    cell_start[row].assign(static_cast<std::size_t>(K), 0);
    root[row].assign(static_cast<std::size_t>(K), 0);
    for (int col = 0; col < K; ++col) {
      cell_start[row][static_cast<std::size_t>(col)] = static_cast<int>(slot_column[row].size());
      for (int pos = 0; pos < g.occupancy(row, col); ++pos) slot_column[row].push_back(col);
      if (g.occupancy(row, col) > 0) rightmost[row][static_cast<std::size_t>(col)] = static_cast<int>(slot_column[row].size()) - 1;
    }
    for (int col : g.marks(row)) root[row][static_cast<std::size_t>(col)] = 1;
  }
  int fixed_top = -1;
  int fixed_bottom = -1;
  if (fixed) {
    require(fixed->top_position >= 0 && fixed->top_position < g.occupancy(0, fixed->top_column) &&
                fixed->bottom_position >= 0 && fixed->bottom_position < g.occupancy(1, fixed->bottom_column),
            "gamma_count_brute: fixed pair refers to a missing vertex");
    fixed_top = cell_start[0][static_cast<std::size_t>(fixed->top_column)] + fixed->top_position;
    fixed_bottom = cell_start[1][static_cast<std::size_t>(fixed->bottom_column)] + fixed->bottom_position;
  }

  std::vector<int> matching(static_cast<std::size_t>(s));  // top slot i <-> bottom slot matching[i]
  std::iota(matching.begin(), matching.end(), 0);
  std::vector<int> back(static_cast<std::size_t>(s));
  std::vector<int> psi_top(static_cast<std::size_t>(K));
  std::vector<int> psi_bottom(static_cast<std::size_t>(K));
  std::uint64_t total = 0;
  do {
    if (fixed && matching[static_cast<std::size_t>(fixed_top)] != fixed_bottom) continue;
    for (int i = 0; i < s; ++i) back[static_cast<std::size_t>(matching[static_cast<std::size_t>(i)])] = i;
    for (int col = 0; col < K; ++col) {
      const auto c = static_cast<std::size_t>(col);
      psi_top[c] = -1;
      psi_bottom[c] = -1;
      if (!root[0][c]) {
        if (auto it = g.arrows().find(col); it != g.arrows().end()) {
          psi_top[c] = it->second;
        } else if (rightmost[0][c] >= 0) {
          psi_top[c] = slot_column[1][static_cast<std::size_t>(matching[static_cast<std::size_t>(rightmost[0][c])])];
        }
      }
      if (!root[1][c] && rightmost[1][c] >= 0) {
        psi_bottom[c] = slot_column[0][static_cast<std::size_t>(back[static_cast<std::size_t>(rightmost[1][c])])];
      }
    }
    if (rooted(psi_top, root[0]) && rooted(psi_bottom, root[1])) ++total;
  } while (std::next_permutation(matching.begin(), matching.end()));
  return BigInt(static_cast<unsigned long>(total));
}

BigInt gamma_count_brute_via_arrays(const SubstructureGamma& g) {
  const int s = g.vertices();
  std::vector<int> matching(static_cast<std::size_t>(s));
  std::iota(matching.begin(), matching.end(), 0);
  std::uint64_t total = 0;
  do {
    std::vector<int> partner(static_cast<std::size_t>(2 * s));
    for (int i = 0; i < s; ++i) {
      partner[static_cast<std::size_t>(i)] = s + matching[static_cast<std::size_t>(i)];
      partner[static_cast<std::size_t>(s + matching[static_cast<std::size_t>(i)])] = i;
    }
    const ArrowedArray arrowed(PairedArray(g.columns(), g.occupancy(), {g.marks(0), g.marks(1)}, Pairing(std::move(partner))),
                               g.arrows());
    if (check_forest(arrowed)) ++total;
  } while (std::next_permutation(matching.begin(), matching.end()));
  return BigInt(static_cast<unsigned long>(total));
}

BigInt omega_count_brute(const SubstructureOmega& o) {
  const int K = o.columns();
  BigInt total(0);
  for_each_subset(K, o.marks_top(), [&](const ColumnSet& top_marks) {
    for_each_subset(K, o.marks_bottom(), [&](const ColumnSet& bottom_marks) {
      for (int col = 0; col < K; ++col) {
        if (o.occupancy()[static_cast<std::size_t>(col)] == 0 && !top_marks.contains(col) &&
            !bottom_marks.contains(col)) {
          return;
        }
      }
      total += gamma_count_brute(SubstructureGamma(K, {o.occupancy(), o.occupancy()}, {top_marks, bottom_marks}));
    });
  });
  return total;
}

void for_each_weak_composition(int total, int parts, const std::function<void(std::span<const int>)>& visit) {
  require(total >= 0 && parts >= 1, "for_each_weak_composition: need total >= 0 and parts >= 1");
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> place = [&](int index, int remaining) {
    if (index == parts - 1) {
      current[static_cast<std::size_t>(index)] = remaining;
      visit(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[static_cast<std::size_t>(index)] = v;
      place(index + 1, remaining - v);
    }
  };
  place(0, total);
}

void for_each_subset(int n, int k, const std::function<void(const ColumnSet&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int next) {
    if (static_cast<int>(chosen.size()) == k) {
      visit(ColumnSet(chosen.begin(), chosen.end()));
      return;
    }
    for (int c = next; c <= n - (k - static_cast<int>(chosen.size())); ++c) {
      chosen.push_back(c);
      pick(c + 1);
      chosen.pop_back();
    }
  };
  pick(0);
}

}  // namespace mapenum::brute
