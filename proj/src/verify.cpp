#include "mapenum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "mapenum/brute_force.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/formulas.hpp"
#include "mapenum/random_substructures.hpp"
#include "mapenum/substructure_json.hpp"
#include "mapenum/transforms.hpp"

namespace mapenum::verify {

namespace {

using Body = std::function<void(SweepReport&)>;

SweepReport run_sweep(const std::string& name, const Body& body) {
  SweepReport report;
  report.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(report);
  } catch (const IntegralityError& e) {
    report.counterexample = std::string("integrality failure: ") + e.what();
  } catch (const PreconditionError& e) {
    report.counterexample = std::string("precondition failure: ") + e.what();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string describe(const SubstructureGamma& g) { return gamma_to_json(g).dump(); }

std::string tuple_text(int q1, int q2, int s) {
  return "(q1=" + std::to_string(q1) + ", q2=" + std::to_string(q2) + ", s=" + std::to_string(s) + ")";
}

std::string counts_text(const CycleCountVector& v) {
  std::ostringstream out;
  out << "[";
  for (int L = 1; L <= v.max_cycles(); ++L) out << (L > 1 ? ", " : "") << to_string(v.count(L));
  out << "]";
  return out.str();
}

/// Every (q1, q2, s) with s >= 1 and q1 + q2 + s = d.
void for_each_tuple(int d, const std::function<void(int, int, int)>& visit) {
  for (int s = 1; s <= d; ++s) {
    for (int q1 = 0; q1 <= d - s; ++q1) visit(q1, d - s - q1, s);
  }
}

// The canonical-array oracle is the slowest piece of the surjections suite
// and three sweeps share its values.
BigInt canonical_brute_cached(int K, int q1, int q2, int s) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, BigInt> cache;
  const auto key = std::make_tuple(K, q1, q2, s);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigInt value = brute::canonical_array_count_brute(K, q1, q2, s);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

BigInt surjection_brute_cached(int K, int q1, int q2, int s) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, BigInt> cache;
  const auto key = std::make_tuple(K, q1, q2, s);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigInt value = brute::paired_surjection_count_brute(K, q1, q2, s);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

bool status_matches(const SubstructureGamma& a, const SubstructureGamma& b, std::string& which) {
  if (check_nonempty(a) != check_nonempty(b)) which = "non-empty";
  else if (check_balance(a) != check_balance(b)) which = "balance";
  else if (check_full(a) != check_full(b)) which = "full";
  else return true;
  return false;
}

std::string branch_name(random::GammaBranch b) {
  switch (b) {
    case random::GammaBranch::General: return "s>=A+2";
    case random::GammaBranch::OneAboveA: return "s=A+1";
    case random::GammaBranch::AtMostA: return "s<=A";
  }
  return "?";
}

}  // namespace

SweepOptions SweepOptions::with_max_d(int max_d, std::uint64_t seed) {
  SweepOptions o;
  o.seed = seed;
  o.hz_max_q = std::min(o.hz_max_q, max_d);
  o.gs_max_d = std::min(o.gs_max_d, max_d);
  o.simplified_max_q = std::min(o.simplified_max_q, max_d);
  o.simplified_max_s = std::min(o.simplified_max_s, max_d);
  o.surjection_max_d = std::min(o.surjection_max_d, max_d);
  o.vertical_max_s = std::min(o.vertical_max_s, max_d);
  o.gamma_max_s = std::min(o.gamma_max_s, max_d);
  o.omega_max_s = std::min(o.omega_max_s, max_d);
  o.lemma_max_s = std::min(o.lemma_max_s, max_d);
  return o;
}

SweepReport hz_vs_brute(const SweepOptions& o) {
  return run_sweep("hz_vs_brute", [&](SweepReport& r) {
    for (int q = 1; q <= o.hz_max_q; ++q) {
      const CycleCountVector brute = brute::hz_counts_brute(q, o.workers);
      const CycleCountVector formula = series_cycle_counts(hz_series(q), q);
      ++r.checks;
      if (!(brute == formula)) {
        r.counterexample = "q=" + std::to_string(q) + ": formula " + counts_text(formula) + " vs brute " +
                           counts_text(brute);
        return;
      }
      genus_counts(brute, 1, q);
      ++r.coverage["parity"];
      if (brute.total() != double_factorial(2L * q - 1)) {
        r.counterexample = "q=" + std::to_string(q) + ": total " + to_string(brute.total()) + " != (2q-1)!!";
        return;
      }
      ++r.coverage["total"];
    }
  });
}

SweepReport gs_vs_brute(const SweepOptions& o) {
  return run_sweep("gs_vs_brute", [&](SweepReport& r) {
    for (int d = 1; d <= o.gs_max_d && !r.counterexample; ++d) {
      for_each_tuple(d, [&](int q1, int q2, int s) {
        if (r.counterexample) return;
        const CycleCountVector brute = brute::gs_counts_brute(q1, q2, s, o.workers);
        const CycleCountVector formula = series_cycle_counts(gs_series(q1, q2, s), d);
        ++r.checks;
        if (!(brute == formula)) {
          r.counterexample = tuple_text(q1, q2, s) + ": formula " + counts_text(formula) + " vs brute " +
                             counts_text(brute);
          return;
        }
        genus_counts(brute, 2, d);
        ++r.coverage["parity"];
        const long p1 = 2L * q1 + s;
        const long p2 = 2L * q2 + s;
        const BigInt expected = binomial(p1, s) * binomial(p2, s) * factorial(s) * double_factorial(2L * q1 - 1) *
                                double_factorial(2L * q2 - 1);
        if (brute.total() != expected) {
          r.counterexample = tuple_text(q1, q2, s) + ": total " + to_string(brute.total()) + " != " +
                             to_string(expected);
          return;
        }
        ++r.coverage["total"];
      });
    }
  });
}

SweepReport gs_simplified_vs_gs(const SweepOptions& o) {
  return run_sweep("gs_simplified_vs_gs", [&](SweepReport& r) {
    for (int q1 = 0; q1 <= o.simplified_max_q; ++q1) {
      for (int q2 = 0; q2 <= o.simplified_max_q; ++q2) {
        for (int s = 1; s <= o.simplified_max_s; ++s) {
          const BinomialPoly a = gs_series(q1, q2, s);
          const BinomialPoly b = gs_series_simplified(q1, q2, s);
          ++r.checks;
          if (!(a == b)) {
            r.counterexample = tuple_text(q1, q2, s) + ": triple sum " + format_binomial(a) + " vs double sum " +
                               format_binomial(b);
            return;
          }
          series_cycle_counts(b, q1 + q2 + s);
          ++r.coverage["integral"];
        }
      }
    }
  });
}

SweepReport surjections_vs_canonical(const SweepOptions& o) {
  return run_sweep("surjections_vs_canonical", [&](SweepReport& r) {
    for (int d = 1; d <= o.surjection_max_d && !r.counterexample; ++d) {
      for_each_tuple(d, [&](int q1, int q2, int s) {
        for (int K = 1; K <= 2 * d && !r.counterexample; ++K) {
          const BigInt f = surjection_brute_cached(K, q1, q2, s);
          const BigInt c = canonical_brute_cached(K, q1, q2, s);
          ++r.checks;
          if (f != c) {
            r.counterexample = tuple_text(q1, q2, s) + " K=" + std::to_string(K) + ": surjections " + to_string(f) +
                               " vs canonical arrays " + to_string(c);
          }
        }
      });
    }
  });
}

SweepReport series_from_surjections_vs_gs(const SweepOptions& o) {
  return run_sweep("series_from_surjections_vs_gs", [&](SweepReport& r) {
    for (int d = 1; d <= o.surjection_max_d && !r.counterexample; ++d) {
      for_each_tuple(d, [&](int q1, int q2, int s) {
        if (r.counterexample) return;
        std::map<int, BigInt> f;
        for (int K = 1; K <= 2 * d; ++K) f[K] = surjection_brute_cached(K, q1, q2, s);
        const BinomialPoly from_f = series_from_surjections(f);
        const BinomialPoly direct = gs_series(q1, q2, s);
        ++r.checks;
        if (!(from_f == direct)) {
          r.counterexample = tuple_text(q1, q2, s) + ": from surjections " + format_binomial(from_f) + " vs " +
                             format_binomial(direct);
        }
      });
    }
  });
}

SweepReport canonical_from_vertical_vs_brute(const SweepOptions& o) {
  return run_sweep("canonical_from_vertical_vs_brute", [&](SweepReport& r) {
    for (int d = 1; d <= o.surjection_max_d && !r.counterexample; ++d) {
      for_each_tuple(d, [&](int q1, int q2, int s) {
        for (int K = 1; K <= 2 * d && !r.counterexample; ++K) {
          const BigInt formula = canonical_from_vertical(K, q1, q2, s, vertical_count_formula);
          const BigInt brute = canonical_brute_cached(K, q1, q2, s);
          ++r.checks;
          if (formula != brute) {
            r.counterexample = tuple_text(q1, q2, s) + " K=" + std::to_string(K) + ": from vertical " +
                               to_string(formula) + " vs brute " + to_string(brute);
          }
        }
      });
    }
  });
}

SweepReport vertical_vs_brute(const SweepOptions& o) {
  return run_sweep("vertical_vs_brute", [&](SweepReport& r) {
    for (int K = 1; K <= o.vertical_max_columns; ++K) {
      for (int R1 = 1; R1 <= K; ++R1) {
        for (int R2 = 1; R2 <= K; ++R2) {
          for (int s = 1; s <= o.vertical_max_s; ++s) {
            const BigInt formula = vertical_count_formula(K, R1, R2, s);
            const BigInt brute = brute::vertical_array_count_brute(K, R1, R2, s);
            ++r.checks;
            if (formula != brute) {
              r.counterexample = "(K=" + std::to_string(K) + ", R1=" + std::to_string(R1) + ", R2=" +
                                 std::to_string(R2) + ", s=" + std::to_string(s) + "): formula " + to_string(formula) +
                                 " vs brute " + to_string(brute);
              return;
            }
            ++r.coverage[formula == 0 ? "zero" : "nonzero"];
          }
        }
      }
    }
  });
}

SweepReport gamma_vs_brute(const SweepOptions& o) {
  return run_sweep("gamma_vs_brute", [&](SweepReport& r) {
    const int base_max = std::min(o.gamma_max_s, o.gamma_max_columns);
    for (int s = 1; s <= base_max; ++s) {
      Occupancy w{std::vector<int>(static_cast<std::size_t>(s), 1), std::vector<int>(static_cast<std::size_t>(s), 1)};
      ColumnSet all;
      for (int col = 0; col < s; ++col) all.insert(col);
      const SubstructureGamma g(s, std::move(w), {all, all});
      const BigInt formula = gamma_count_formula(g);
      const BigInt brute = brute::gamma_count_brute(g);
      ++r.checks;
      if (formula != factorial(s) || brute != factorial(s)) {
        r.counterexample = "all-D base case s=" + std::to_string(s) + ": formula " + to_string(formula) +
                           ", brute " + to_string(brute);
        return;
      }
      ++r.coverage["all-D"];
    }

    random::Rng rng(o.seed);
    int produced = 0;
    while (produced < o.gamma_instances) {
      std::optional<SubstructureGamma> g;
      if (produced % 6 == 5) {
        g = random::irreducible_full_gamma_at_most_a(rng, o.gamma_max_columns, o.gamma_max_s);
      } else {
        g = random::irreducible_full_gamma(rng, o.gamma_max_columns, o.gamma_max_s);
      }
      if (!g) continue;
      ++produced;
      const BigInt formula = gamma_count_formula(*g);
      const BigInt brute = brute::gamma_count_brute(*g);
      ++r.checks;
      if (formula != brute) {
        r.counterexample = describe(*g) + ": formula " + to_string(formula) + " vs brute " + to_string(brute);
        return;
      }
      ++r.coverage[branch_name(random::branch_of(*g))];
    }
    for (auto b : {random::GammaBranch::General, random::GammaBranch::OneAboveA, random::GammaBranch::AtMostA}) {
      if (r.coverage[branch_name(b)] == 0) {
        r.counterexample = "branch " + branch_name(b) + " not reached by the sample";
        return;
      }
    }
  });
}

SweepReport gamma_noarrows_vs_brute(const SweepOptions& o) {
  return run_sweep("gamma_noarrows_vs_brute", [&](SweepReport& r) {
    random::Rng rng(o.seed + 1);
    for (int i = 0; i < o.noarrow_instances; ++i) {
      const SubstructureGamma g = random::arrowless_gamma(rng, o.gamma_max_columns, o.gamma_max_s, true);
      const BigInt formula = gamma_count_formula_noarrows(g);
      const BigInt brute = brute::gamma_count_brute(g);
      ++r.checks;
      if (formula != brute) {
        r.counterexample = describe(g) + ": formula " + to_string(formula) + " vs brute " + to_string(brute);
        return;
      }
      ++r.coverage[check_full(g) ? "full" : "not full"];
      ++r.coverage[formula == 0 ? "zero" : "nonzero"];
    }
    if (r.coverage["not full"] == 0) r.counterexample = "sample contains no substructure violating the full condition";
  });
}

SweepReport omega_vs_brute(const SweepOptions& o) {
  return run_sweep("omega_vs_brute", [&](SweepReport& r) {
    for (int K = 1; K <= o.omega_max_columns; ++K) {
      for (int s = 1; s <= o.omega_max_s && !r.counterexample; ++s) {
        brute::for_each_weak_composition(s, K, [&](std::span<const int> w) {
          for (int R1 = 1; R1 <= K && !r.counterexample; ++R1) {
            for (int R2 = 1; R2 <= K && !r.counterexample; ++R2) {
              const SubstructureOmega om(K, R1, R2, std::vector<int>(w.begin(), w.end()));
              const BigInt formula = omega_count_formula(om);
              const BigInt brute = brute::omega_count_brute(om);
              ++r.checks;
              if (formula != brute) {
                r.counterexample = omega_to_json(om).dump() + ": formula " + to_string(formula) + " vs brute " +
                                   to_string(brute);
              }
            }
          }
        });
      }
    }
  });
}

SweepReport arrow_to_mark_lemma(const SweepOptions& o) {
  return run_sweep("arrow_to_mark_lemma", [&](SweepReport& r) {
    random::Rng rng(o.seed + 2);
    int produced = 0;
    while (produced < o.lemma_instances) {
      const auto c = random::to_mark_case(rng, o.lemma_max_columns, o.lemma_max_s);
      if (!c) continue;
      ++produced;
      const SubstructureGamma after = arrow_simplify_to_mark(c->gamma, c->x);
      const BigInt before_count = brute::gamma_count_brute(c->gamma);
      const BigInt after_count = brute::gamma_count_brute(after);
      ++r.checks;
      std::string which;
      if (before_count != after_count) {
        r.counterexample = describe(c->gamma) + " X=" + std::to_string(c->x) + ": count " + to_string(before_count) +
                           " became " + to_string(after_count);
        return;
      }
      if (!status_matches(c->gamma, after, which)) {
        r.counterexample = describe(c->gamma) + " X=" + std::to_string(c->x) + ": " + which + " status changed";
        return;
      }
      ++r.coverage[before_count == 0 ? "zero" : "nonzero"];
    }
  });
}

SweepReport arrow_retarget_lemma(const SweepOptions& o) {
  return run_sweep("arrow_retarget_lemma", [&](SweepReport& r) {
    random::Rng rng(o.seed + 3);
    int produced = 0;
    while (produced < o.lemma_instances) {
      const auto c = random::retarget_case(rng, o.lemma_max_columns, o.lemma_max_s);
      if (!c) continue;
      ++produced;
      const SubstructureGamma after = arrow_simplify_retarget(c->gamma, c->x);
      const BigInt before_count = brute::gamma_count_brute(c->gamma);
      const BigInt after_count = brute::gamma_count_brute(after);
      ++r.checks;
      std::string which;
      if (before_count != after_count) {
        r.counterexample = describe(c->gamma) + " X=" + std::to_string(c->x) + ": count " + to_string(before_count) +
                           " became " + to_string(after_count);
        return;
      }
      if (!status_matches(c->gamma, after, which)) {
        r.counterexample = describe(c->gamma) + " X=" + std::to_string(c->x) + ": " + which + " status changed";
        return;
      }
      ++r.coverage[has_arrow_cycle(after) ? "cyclic" : "acyclic"];
    }
  });
}

SweepReport column_pointing_lemma(const SweepOptions& o) {
  return run_sweep("column_pointing_lemma", [&](SweepReport& r) {
    random::Rng rng(o.seed + 4);
    int produced = 0;
    while (produced < o.lemma_instances) {
      const auto c = random::pointing_case(rng, o.lemma_max_columns, o.lemma_max_s);
      if (!c) continue;
      ++produced;
      const SubstructureGamma& g = c->gamma;
      const SubstructureGamma after = column_pointing(g, c->x, c->y, c->bottom_position);
      const brute::FixedPair pair{c->x, g.occupancy(0, c->x) - 1, c->y, c->bottom_position};
      const BigInt before_count = brute::gamma_count_brute(g, pair);
      const BigInt after_count = brute::gamma_count_brute(after);
      const std::string where = describe(g) + " X=" + std::to_string(c->x) + " Y=" + std::to_string(c->y) +
                                " u=" + std::to_string(c->bottom_position);
      ++r.checks;
      if (before_count != after_count) {
        r.counterexample = where + ": restricted count " + to_string(before_count) + " became " +
                           to_string(after_count);
        return;
      }
      if (check_nonempty(g) != check_nonempty(after) || check_full(g) != check_full(after)) {
        r.counterexample = where + ": non-empty or full status changed";
        return;
      }
      ++r.coverage[check_full(g) ? "full" : "not full"];
    }
  });
}

SweepReport column_merging_lemma(const SweepOptions& o) {
  return run_sweep("column_merging_lemma", [&](SweepReport& r) {
    random::Rng rng(o.seed + 5);
    int produced = 0;
    while (produced < o.lemma_instances) {
      const auto c = random::merging_case(rng, o.lemma_max_columns, o.lemma_max_s);
      if (!c) continue;
      ++produced;
      const SubstructureGamma& g = c->gamma;
      const SubstructureGamma after = column_merging(g, c->x, c->y);
      const brute::FixedPair pair{c->x, g.occupancy(0, c->x) - 1, c->y, g.occupancy(1, c->y) - 1};
      const BigInt before_count = brute::gamma_count_brute(g, pair);
      const BigInt after_count = brute::gamma_count_brute(after);
      const std::string where = describe(g) + " X=" + std::to_string(c->x) + " Y=" + std::to_string(c->y);
      ++r.checks;
      if (before_count != after_count) {
        r.counterexample = where + ": restricted count " + to_string(before_count) + " became " +
                           to_string(after_count);
        return;
      }
      if (!check_full(after)) {
        r.counterexample = where + ": merged substructure is not full";
        return;
      }
      ++r.coverage[before_count == 0 ? "zero" : "nonzero"];
    }
  });
}

SweepReport closure_confluence(const SweepOptions& o) {
  return run_sweep("closure_confluence", [&](SweepReport& r) {
    random::Rng rng(o.seed + 6);
    for (int i = 0; i < o.lemma_instances; ++i) {
      const SubstructureGamma g = random::any_gamma(rng, o.lemma_max_columns, o.lemma_max_s, 0.6);
      const BigInt original = brute::gamma_count_brute(g);
      const ClosureResult first = irreducible_closure(g);
      ++r.checks;
      if (std::holds_alternative<CycleDetected>(first)) {
        if (original != 0) {
          r.counterexample = describe(g) + ": cyclic closure but " + to_string(original) + " arrays";
          return;
        }
        ++r.coverage["cyclic"];
      } else {
        const auto& closed = std::get<SubstructureGamma>(first);
        if (!is_irreducible(closed) || brute::gamma_count_brute(closed) != original) {
          r.counterexample = describe(g) + ": closure " + describe(closed) + " is reducible or changes the count";
          return;
        }
        ++r.coverage["irreducible"];
      }
      for (int order = 0; order < 3; ++order) {
        const ClosureResult other = irreducible_closure(g, rng);
        if (first.index() != other.index()) {
          r.counterexample = describe(g) + ": closure orders disagree on cycle detection";
          return;
        }
        if (const auto* closed = std::get_if<SubstructureGamma>(&other)) {
          const auto& reference = std::get<SubstructureGamma>(first);
          if (brute::gamma_count_brute(*closed) != original ||
              !(classify_columns(*closed) == classify_columns(reference))) {
            r.counterexample = describe(g) + ": closures " + describe(reference) + " and " + describe(*closed) +
                               " differ";
            return;
          }
        }
      }
    }
  });
}

SweepReport labelled_to_canonical_bijection(const SweepOptions& o) {
  return run_sweep("labelled_to_canonical_bijection", [&](SweepReport& r) {
    const int max_d = std::min(3, o.surjection_max_d);
    for (int d = 1; d <= max_d && !r.counterexample; ++d) {
      for_each_tuple(d, [&](int q1, int q2, int s) {
        const TwoRowGround ground(2 * q1 + s, 2 * q2 + s);
        for (int K = 1; K <= 2 * d && !r.counterexample; ++K) {
          using Key = std::tuple<Occupancy, ColumnSet, ColumnSet, std::vector<int>>;
          std::set<Key> images;
          std::uint64_t sources = 0;
          std::optional<std::string> bad;
          brute::for_each_paired_surjection(K, q1, q2, s, [&](const Pairing& mu, std::span<const int> pi) {
            ++sources;
            if (bad) return;
            const PairedArray a = labelled_to_canonical(ground, mu, pi, K);
            if (!(check_nonempty(a) && check_balance(a) && check_forest(a))) {
              bad = "image of a paired surjection is not a proper array";
              return;
            }
            const auto partners = a.pairing().partners();
            images.emplace(a.occupancy(), a.marks(0), a.marks(1), std::vector<int>(partners.begin(), partners.end()));
          });
          const std::string where = tuple_text(q1, q2, s) + " K=" + std::to_string(K);
          ++r.checks;
          if (bad) {
            r.counterexample = where + ": " + *bad;
          } else if (images.size() != sources) {
            r.counterexample = where + ": " + std::to_string(sources) + " surjections but " +
                               std::to_string(images.size()) + " distinct images";
          } else if (BigInt(static_cast<unsigned long>(images.size())) != canonical_brute_cached(K, q1, q2, s)) {
            r.counterexample = where + ": " + std::to_string(images.size()) + " images but " +
                               to_string(canonical_brute_cached(K, q1, q2, s)) + " canonical arrays";
          }
        }
      });
    }
  });
}

std::vector<std::string> suite_names() { return {"hz", "gs", "surjections", "vertical", "gamma", "omega", "lemmas", "all"}; }

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SweepReport> run_suite(const std::string& name, const SweepOptions& o) {
  require(is_suite(name), "unknown suite '" + name + "'");
  const bool all = name == "all";
  std::vector<SweepReport> out;
  if (all || name == "hz") out.push_back(hz_vs_brute(o));
  if (all || name == "gs") {
    out.push_back(gs_vs_brute(o));
    out.push_back(gs_simplified_vs_gs(o));
  }
  if (all || name == "surjections") {
    out.push_back(surjections_vs_canonical(o));
    out.push_back(series_from_surjections_vs_gs(o));
    out.push_back(canonical_from_vertical_vs_brute(o));
    out.push_back(labelled_to_canonical_bijection(o));
  }
  if (all || name == "vertical") out.push_back(vertical_vs_brute(o));
  if (all || name == "gamma") {
    out.push_back(gamma_vs_brute(o));
    out.push_back(gamma_noarrows_vs_brute(o));
  }
  if (all || name == "omega") out.push_back(omega_vs_brute(o));
  if (all || name == "lemmas") {
    out.push_back(arrow_to_mark_lemma(o));
    out.push_back(arrow_retarget_lemma(o));
    out.push_back(column_pointing_lemma(o));
    out.push_back(column_merging_lemma(o));
    out.push_back(closure_confluence(o));
  }
  return out;
}

}  // namespace mapenum::verify
