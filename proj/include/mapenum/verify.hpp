#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Oracle-equality sweeps: each formula or transform against the brute-force
// enumerators, over a parameter range or a seeded random sample.

namespace mapenum::verify {

struct SweepOptions {
  std::uint64_t seed = 0;
  int hz_max_q = 7;
  int gs_max_d = 6;
  int simplified_max_q = 5;
  int simplified_max_s = 6;
  int surjection_max_d = 4;
  int vertical_max_columns = 4;
  int vertical_max_s = 5;
  int gamma_instances = 300;
  int gamma_max_columns = 6;
  int gamma_max_s = 7;
  int noarrow_instances = 300;
  int omega_max_columns = 4;
  int omega_max_s = 5;
  int lemma_instances = 100;
  int lemma_max_columns = 5;
  int lemma_max_s = 6;
  int workers = 1;

  /// Caps every pair-count bound at `max_d`.
  static SweepOptions with_max_d(int max_d, std::uint64_t seed);
};

struct SweepReport {
  std::string name;
  std::uint64_t checks = 0;
  std::optional<std::string> counterexample;
  /// Named tallies, e.g. how many instances hit each formula branch.
  std::map<std::string, std::uint64_t> coverage;
  double seconds = 0.0;

  bool passed() const { return !counterexample.has_value(); }
};

SweepReport hz_vs_brute(const SweepOptions& o);
SweepReport gs_vs_brute(const SweepOptions& o);
SweepReport gs_simplified_vs_gs(const SweepOptions& o);
SweepReport surjections_vs_canonical(const SweepOptions& o);
SweepReport series_from_surjections_vs_gs(const SweepOptions& o);
SweepReport canonical_from_vertical_vs_brute(const SweepOptions& o);
SweepReport vertical_vs_brute(const SweepOptions& o);
SweepReport gamma_vs_brute(const SweepOptions& o);
SweepReport gamma_noarrows_vs_brute(const SweepOptions& o);
SweepReport omega_vs_brute(const SweepOptions& o);
SweepReport arrow_to_mark_lemma(const SweepOptions& o);
SweepReport arrow_retarget_lemma(const SweepOptions& o);
SweepReport column_pointing_lemma(const SweepOptions& o);
SweepReport column_merging_lemma(const SweepOptions& o);
SweepReport closure_confluence(const SweepOptions& o);
SweepReport labelled_to_canonical_bijection(const SweepOptions& o);

/// Suite names: hz, gs, surjections, vertical, gamma, omega, lemmas, all.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<SweepReport> run_suite(const std::string& name, const SweepOptions& o);

}  // namespace mapenum::verify
