#include "mapenum/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "mapenum/brute_force.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/formulas.hpp"
#include "mapenum/substructure_json.hpp"
#include "mapenum/transforms.hpp"
#include "mapenum/verify.hpp"

namespace mapenum {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct SeriesOptions {
  bool by_genus = false;
  std::string format = "text";
  std::string method = "formula";
};

void print_series(std::ostream& out, const CycleCountVector& counts, int n_vertices, int d, const SeriesOptions& o) {
  if (o.by_genus) {
    const auto table = genus_counts(counts, n_vertices, d);
    if (o.format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (const auto& [g, c] : table) j[std::to_string(g)] = to_string(c);
      out << nlohmann::ordered_json{{"genus", j}}.dump() << "\n";
    } else if (o.format == "csv") {
      out << "genus,count\n";
      for (const auto& [g, c] : table) out << g << "," << to_string(c) << "\n";
    } else {
      for (const auto& [g, c] : table) out << "genus " << g << ": " << to_string(c) << "\n";
    }
    return;
  }
  if (o.format == "json") {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (int L = 1; L <= counts.max_cycles(); ++L) {
      if (counts.count(L) != 0) coeffs[std::to_string(L)] = to_string(counts.count(L));
    }
    out << nlohmann::ordered_json{{"basis", "monomial"}, {"coeffs", coeffs}}.dump() << "\n";
  } else if (o.format == "csv") {
    out << "faces,count\n";
    for (int L = 1; L <= counts.max_cycles(); ++L) {
      if (counts.count(L) != 0) out << L << "," << to_string(counts.count(L)) << "\n";
    }
  } else {
    out << format_monomial(counts.to_monomial()) << "\n";
  }
}

void add_series_flags(CLI::App* cmd, SeriesOptions& o, std::vector<std::string> methods) {
  cmd->add_flag("--by-genus", o.by_genus, "Tabulate by genus instead of face count");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--method", o.method, "Evaluation method")->check(CLI::IsMember(methods));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open spec file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
}

BigInt gamma_formula(const SubstructureGamma& g) {
  const ClosureResult closed = irreducible_closure(g);
  if (std::holds_alternative<CycleDetected>(closed)) return BigInt(0);
  const auto& h = std::get<SubstructureGamma>(closed);
  if (h.arrows().empty()) return gamma_count_formula_noarrows(h);
  require(check_full(h), "formula method needs the full condition once arrows remain; use --method brute");
  return gamma_count_formula(h);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of one- and two-vertex maps by faces"};
  app.require_subcommand(1);

  int q = 0;
  SeriesOptions hz_opts;
  auto* hz = app.add_subcommand("hz", "Face counts of one-vertex maps with q edges");
  hz->add_option("--q", q, "Number of edges")->required();
  add_series_flags(hz, hz_opts, {"formula", "brute"});

  int q1 = 0, q2 = 0, s = 0;
  SeriesOptions gs_opts;
  auto* gs = app.add_subcommand("gs", "Face counts of two-vertex maps");
  gs->add_option("--q1", q1, "Loops at the first vertex")->required();
  gs->add_option("--q2", q2, "Loops at the second vertex")->required();
  gs->add_option("--s", s, "Edges joining the two vertices")->required();
  add_series_flags(gs, gs_opts, {"formula", "simplified", "brute"});

  int K = 0, R1 = 0, R2 = 0, vs = 0;
  std::string vertical_method = "formula";
  auto* vertical = app.add_subcommand("vertical", "Proper vertical arrays");
  vertical->add_option("--K", K, "Columns")->required();
  vertical->add_option("--R1", R1, "Marked columns in the top row")->required();
  vertical->add_option("--R2", R2, "Marked columns in the bottom row")->required();
  vertical->add_option("--s", vs, "Vertices per row")->required();
  vertical->add_option("--method", vertical_method)->check(CLI::IsMember({"formula", "brute"}));

  std::string gamma_file, gamma_method = "formula";
  auto* count_gamma = app.add_subcommand("count-gamma", "Arrowed arrays satisfying a substructure");
  count_gamma->add_option("--spec", gamma_file, "Substructure JSON file")->required();
  count_gamma->add_option("--method", gamma_method)->check(CLI::IsMember({"formula", "brute"}));

  std::string omega_file, omega_method = "formula";
  auto* count_omega = app.add_subcommand("count-omega", "Vertical arrays with fixed occupancy");
  count_omega->add_option("--spec", omega_file, "Occupancy JSON file")->required();
  count_omega->add_option("--method", omega_method)->check(CLI::IsMember({"formula", "brute"}));

  std::string suite = "all";
  std::optional<int> max_d;
  std::uint64_t seed = 0;
  int workers = 1;
  auto* verify = app.add_subcommand("verify", "Run oracle-equality sweeps");
  verify->add_option("--suite", suite)->check(CLI::IsMember(verify::suite_names()));
  verify->add_option("--max-d", max_d, "Cap on edge counts in every sweep")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized sweeps");
  verify->add_option("--workers", workers, "Threads for the pairing enumerations")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*hz) {
      require(q >= 1, "hz: q must be a positive integer");
      const CycleCountVector counts =
          hz_opts.method == "brute" ? brute::hz_counts_brute(q) : series_cycle_counts(hz_series(q), q);
      print_series(out, counts, 1, q, hz_opts);
    } else if (*gs) {
      require(q1 >= 0 && q2 >= 0 && s >= 1, "gs: need q1, q2 >= 0 and s >= 1");
      const int d = q1 + q2 + s;
      CycleCountVector counts(d);
      if (gs_opts.method == "brute") {
        counts = brute::gs_counts_brute(q1, q2, s);
      } else if (gs_opts.method == "simplified") {
        counts = series_cycle_counts(gs_series_simplified(q1, q2, s), d);
      } else {
        counts = series_cycle_counts(gs_series(q1, q2, s), d);
      }
      print_series(out, counts, 2, d, gs_opts);
    } else if (*vertical) {
      const BigInt n = vertical_method == "brute" ? brute::vertical_array_count_brute(K, R1, R2, vs)
                                                  : vertical_count_formula(K, R1, R2, vs);
      out << to_string(n) << "\n";
    } else if (*count_gamma) {
      const SubstructureGamma g = gamma_from_json(read_json(gamma_file));
      const BigInt n = gamma_method == "brute" ? brute::gamma_count_brute(g) : gamma_formula(g);
      out << to_string(n) << "\n";
    } else if (*count_omega) {
      const SubstructureOmega o = omega_from_json(read_json(omega_file));
      const BigInt n = omega_method == "brute" ? brute::omega_count_brute(o) : omega_count_formula(o);
      out << to_string(n) << "\n";
    } else if (*verify) {
      verify::SweepOptions opts = max_d ? verify::SweepOptions::with_max_d(*max_d, seed) : verify::SweepOptions{};
      opts.seed = seed;
      opts.workers = workers;
      bool ok = true;
      for (const auto& report : verify::run_suite(suite, opts)) {
        out << (report.passed() ? "PASS " : "FAIL ") << report.name << " checks=" << report.checks;
        for (const auto& [key, n] : report.coverage) out << " [" << key << ": " << n << "]";
        out << "\n";
        if (!report.passed()) {
          ok = false;
          out << "  counterexample: " << *report.counterexample << "\n";
        }
      }
      return ok ? kOk : kMismatch;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IntegralityError& e) {
    err << "integrality failure: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace mapenum
