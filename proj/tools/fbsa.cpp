// fbsa: synthesize and check frequency-bin Bell-state analyzers.

#include <CLI11.hpp>

#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "fbsa/serialization.hpp"
#include "fbsa/synthesis.hpp"
#include "fbsa/two_photon.hpp"

namespace fs = std::filesystem;
using namespace fbsa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitQuality = 2;

struct Globals {
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> window_guard;
  bool quiet = false;
};

class Log {
 public:
  explicit Log(bool quiet) : quiet_(quiet) {}
  template <typename... Args>
  void operator()(const Args&... args) const {
    if (quiet_) return;
    (std::cout << ... << args) << '\n';
  }

 private:
  bool quiet_;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

fs::path prepare_out_dir(const std::string& out) {
  if (out.empty()) throw ConfigError("--out DIR is required");
  fs::create_directories(out);
  return out;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const std::vector<std::string>& inputs, std::optional<std::uint64_t> seed,
                    const Json& extra = Json::object()) {
  Json doc{{"command", command},
           {"inputs", inputs},
           {"output_dir", dir.string()},
           {"tool_version", FBSA_VERSION},
           {"timestamp", utc_timestamp()},
           {"options", extra}};
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  write_text_file(dir / "manifest.json", canonical_dump(doc));
}

FrequencyGrid regrid(const FrequencyGrid& grid, int guard) {
  return FrequencyGrid::with_guard(guard, grid.spacing_ghz, grid.center_thz);
}

/// Accepts either a synthesis result ({config, metrics, ...}) or a bare QFP config.
struct LoadedSolution {
  QfpConfig config;
  std::optional<GateMetrics> stored;
};

LoadedSolution load_solution(const std::string& path, const Globals& g) {
  const Json doc = read_json_file(path);
  LoadedSolution s;
  if (doc.is_object() && doc.contains("config")) {
    const auto r = synthesis_result_from_json(doc);
    s.config = r.best_config;
    s.stored = r.metrics;
  } else {
    s.config = qfp_config_from_json(doc);
  }
  if (g.window_guard) s.config.grid = regrid(s.config.grid, *g.window_guard);
  return s;
}

int cmd_synth(const Globals& g, const std::string& problem_path, const std::string& pso_path,
              const std::string& encoding, double min_fidelity, int threads) {
  const Log log(g.quiet);
  SynthesisProblem problem =
      problem_path.empty() ? SynthesisProblem{} : synthesis_problem_from_json(read_json_file(problem_path));
  PsoParams params = pso_path.empty() ? PsoParams{} : pso_params_from_json(read_json_file(pso_path));
  if (!encoding.empty()) {
    const Encoding enc = parse_encoding(encoding);
    const bool identity = problem.target.matrix == Matrix4c::Identity();
    problem.target = identity ? identity_target(enc) : target_unitary(enc);
  }
  if (g.window_guard) problem.grid = regrid(problem.grid, *g.window_guard);
  if (g.seed) params.seed = *g.seed;
  if (threads > 0) params.threads = threads;
  problem.validate();
  params.validate();
  const fs::path dir = prepare_out_dir(g.out);

  log("synth: ", to_string(problem.target.encoding), ", ", params.restarts, " restarts x ",
      params.swarm_size, " particles x ", params.iterations, " iterations");
  const SynthesisResult result = synthesize(problem, params);

  write_text_file(dir / "solution.json", canonical_dump(to_json(result)));
  write_text_file(dir / "trace.csv", trace_to_csv(result.trace));
  write_text_file(dir / "report.json", canonical_dump(to_json(solution_report(result))));
  std::vector<std::string> inputs;
  if (!problem_path.empty()) inputs.push_back(problem_path);
  if (!pso_path.empty()) inputs.push_back(pso_path);
  write_manifest(dir, "synth", inputs, params.seed,
                 Json{{"problem", to_json(problem)}, {"pso", to_json(params)},
                      {"min_fidelity", min_fidelity}});

  const auto& m = result.metrics;
  std::ostringstream summary;
  summary.precision(10);
  summary << "F = " << m.fidelity << "  P = " << m.success_prob << "  C = " << m.cost
          << "  (seed " << result.seed_used << ", " << result.wall_time << " s)";
  log(summary.str());
  if (result.shaper_only) log("note: no RF tones available, shaper-only search");
  if (m.fidelity < min_fidelity) {
    std::cerr << "fidelity " << m.fidelity << " below --min-fidelity " << min_fidelity << '\n';
    return kExitQuality;
  }
  return kExitOk;
}

int cmd_spectra(const Globals& g, const std::string& path, std::optional<int> input_bin, bool all) {
  if (all == input_bin.has_value()) throw CLI::ValidationError("give exactly one of --input-bin, --all");
  const LoadedSolution s = load_solution(path, g);
  const ModeTransform w = compose_qfp(s.config);
  std::vector<int> inputs;
  if (all) {
    const BinAssignment bins = bin_assignment(s.config.encoding);
    inputs.assign(bins.begin(), bins.end());
  } else {
    if (!s.config.grid.contains(*input_bin)) {
      throw ConfigError("input bin " + std::to_string(*input_bin) + " outside window [" +
                        std::to_string(s.config.grid.window_lo) + ", " +
                        std::to_string(s.config.grid.window_hi) + "]");
    }
    inputs.push_back(*input_bin);
  }
  std::string text;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (all) text += (i > 0 ? "\n# input_bin " : "# input_bin ") + std::to_string(inputs[i]) + "\n";
    text += spectrum_to_csv(classical_spectrum(w, inputs[i]), s.config.grid);
  }
  if (g.out.empty()) {
    std::cout << text;
  } else {
    fs::path out(g.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_text_file(out, text);
    Log(g.quiet)("spectra: wrote ", out.string());
  }
  return kExitOk;
}

int cmd_bsa(const Globals& g, const std::string& path, const std::string& state_label,
            std::optional<double> counts) {
  const Log log(g.quiet);
  const BellKind kind = parse_bell_kind(state_label);
  const LoadedSolution s = load_solution(path, g);
  const TargetUnitary target = target_unitary(s.config.encoding);
  const ModeTransform w = compose_qfp(s.config);
  const CoincidencePattern pattern = coincidence_pattern(w, bell_state(kind, target));
  if (counts && !(*counts > 0.0 && std::isfinite(*counts))) throw ConfigError("--counts must be positive");
  const std::uint64_t seed = g.seed.value_or(1);
  const fs::path dir = prepare_out_dir(g.out);

  write_text_file(dir / "pattern.json", canonical_dump(to_json(pattern)));
  write_text_file(dir / "pattern.csv", pattern_to_csv(pattern));
  std::optional<CoincidenceCounts> sampled;
  if (counts) {
    sampled = poisson_sample_counts(pattern, *counts, seed);
    write_text_file(dir / "counts.json", canonical_dump(counts_to_json(*sampled)));
    write_text_file(dir / "counts.csv", counts_to_csv(*sampled));
  }
  for (BinPair p : kAllBinPairs) log(to_string(p), "  ", format_double(pattern[p]));

  if (kind == BellKind::kPhiPlus || kind == BellKind::kPhiMinus) {
    log("notice: ", to_string(kind), " is not discriminable by this analyzer; no accuracy reported");
  } else {
    AccuracyReport report = sampled ? discrimination_accuracy(*sampled, kind)
                                    : discrimination_accuracy(pattern, kind);
    write_text_file(dir / "accuracy.json", canonical_dump(to_json(report)));
    log("accuracy ", format_double(report.accuracy), " +/- ", format_double(report.std_error));
  }
  Json opts{{"state", std::string(to_string(kind))}};
  if (counts) opts["counts"] = *counts;
  write_manifest(dir, "bsa", {path}, counts ? std::optional(seed) : std::nullopt, opts);
  return kExitOk;
}

int cmd_jitter(const Globals& g, double spacing_ghz, std::optional<double> jitter_ps,
               std::optional<double> phase_rad) {
  if (jitter_ps.has_value() == phase_rad.has_value()) {
    throw CLI::ValidationError("give exactly one of --jitter-ps, --phase-rad");
  }
  if (!(spacing_ghz > 0.0)) throw ConfigError("--spacing-ghz must be positive");
  const double dw = 2.0 * std::numbers::pi * spacing_ghz * 1e9;
  double ps = 0.0, rad = 0.0;
  if (jitter_ps) {
    if (*jitter_ps < 0.0) throw ConfigError("--jitter-ps must be non-negative");
    ps = *jitter_ps;
    rad = jitter_phase_bound(dw, ps * 1e-12);
  } else {
    if (*phase_rad < 0.0) throw ConfigError("--phase-rad must be non-negative");
    rad = *phase_rad;
    ps = required_jitter(dw, rad) * 1e12;
  }
  const std::string table = "spacing_ghz,jitter_ps,phase_rad\n" + format_double(spacing_ghz) + "," +
                            format_double(ps) + "," + format_double(rad) + "\n";
  std::cout << table;
  if (!g.out.empty()) {
    const fs::path dir = prepare_out_dir(g.out);
    write_text_file(dir / "jitter.csv", table);
    write_manifest(dir, "jitter", {}, std::nullopt, Json{{"spacing_ghz", spacing_ghz}});
  }
  return kExitOk;
}

int cmd_validate(const Globals& g, const std::string& path, const std::string& target_name,
                 double min_fidelity) {
  const Log log(g.quiet);
  const LoadedSolution s = load_solution(path, g);
  if (target_name != "bsa" && target_name != "identity") {
    throw ConfigError("--target must be bsa or identity");
  }
  const TargetUnitary target = target_name == "identity" ? identity_target(s.config.encoding)
                                                         : target_unitary(s.config.encoding);
  std::vector<std::string> failed;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    log(ok ? "ok    " : "FAIL  ", name, ": ", detail);
    if (!ok) failed.push_back(name);
  };

  const ModeTransform w = compose_qfp(s.config);
  const GateMetrics m = gate_metrics(w, target);
  check("fidelity", m.fidelity >= min_fidelity,
        "F = " + format_double(m.fidelity) + ", P = " + format_double(m.success_prob));

  if (s.stored) {
    const double diff = std::max({std::abs(m.fidelity - s.stored->fidelity),
                                  std::abs(m.success_prob - s.stored->success_prob),
                                  std::abs(m.cost - s.stored->cost)});
    check("stored metrics", diff <= 1e-9, "max deviation " + format_double(diff));
  }

  const auto& grid = s.config.grid;
  QfpConfig wide = s.config;
  wide.grid = regrid(grid, 2 * grid.guard() + 2);
  const double drift = (compose_qfp(wide).computational_submatrix() - w.computational_submatrix())
                           .cwiseAbs()
                           .maxCoeff();
  check("window convergence", drift <= 1e-8, "doubled guard changes block by " + format_double(drift));

  bool shaper_ok = true;
  for (const auto& [bin, e] : s.config.shaper.entries()) shaper_ok = shaper_ok && grid.contains(bin);
  check("shaper bins in window", shaper_ok, std::to_string(s.config.shaper.entries().size()) + " entries");

  if (!g.out.empty()) {
    const fs::path dir = prepare_out_dir(g.out);
    Json doc{{"metrics", to_json(m)}, {"failed", failed}, {"window_drift", drift}, {"pass", failed.empty()}};
    write_text_file(dir / "validation.json", canonical_dump(doc));
    write_manifest(dir, "validate", {path}, std::nullopt, Json{{"target", target_name}});
  }
  if (!failed.empty()) {
    std::string list;
    for (const auto& f : failed) list += (list.empty() ? "" : ", ") + f;
    std::cerr << "validation failed: " << list << '\n';
    return kExitQuality;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency-bin Bell-state analyzer design and simulation"};
  app.set_version_flag("--version", FBSA_VERSION);
  app.require_subcommand(1);

  Globals g;
  // Global flags, accepted before or after the subcommand.
  auto add_globals = [&g](CLI::App* a) {
    a->add_option("--out", g.out, "Output directory (file for spectra)");
    a->add_option("--seed", g.seed, "RNG seed");
    a->add_option("--window-guard", g.window_guard, "Bins of margin beyond the computational bins")
        ->check(CLI::NonNegativeNumber);
    a->add_flag("--quiet", g.quiet, "Suppress progress output");
  };
  add_globals(&app);

  int rc = kExitOk;

  auto* synth = app.add_subcommand("synth", "Search QFP settings for a target gate");
  std::string problem_path, pso_path, encoding;
  double min_fidelity = 1.0 - 1e-5;
  int threads = 0;
  synth->add_option("problem", problem_path, "Problem JSON")->check(CLI::ExistingFile);
  synth->add_option("pso", pso_path, "PSO parameter JSON")->check(CLI::ExistingFile);
  synth->add_option("--encoding", encoding, "adjacent or interleaved");
  synth->add_option("--min-fidelity", min_fidelity, "Exit 2 below this fidelity");
  synth->add_option("--threads", threads, "Evaluation threads");

  auto* spectra = app.add_subcommand("spectra", "Output spectrum for a classical input bin");
  std::string spectra_path;
  std::optional<int> input_bin;
  bool all_bins = false;
  spectra->add_option("solution", spectra_path, "Solution or config JSON")->required()->check(CLI::ExistingFile);
  spectra->add_option("--input-bin", input_bin, "Input bin index");
  spectra->add_flag("--all", all_bins, "All four computational inputs");

  auto* bsa = app.add_subcommand("bsa", "Coincidence pattern for a Bell-state input");
  std::string bsa_path, state = "psi+";
  std::optional<double> counts;
  bsa->add_option("solution", bsa_path, "Solution or config JSON")->required()->check(CLI::ExistingFile);
  bsa->add_option("--state", state, "psi+, psi-, phi+ or phi-");
  bsa->add_option("--counts", counts, "Mean total coincidences for Poisson sampling");

  auto* jitter = app.add_subcommand("jitter", "Timing jitter versus spectral phase");
  double spacing_ghz = 0.0;
  std::optional<double> jitter_ps, phase_rad;
  jitter->add_option("--spacing-ghz", spacing_ghz, "Frequency separation (GHz)")->required();
  jitter->add_option("--jitter-ps", jitter_ps, "Timing resolution (ps)");
  jitter->add_option("--phase-rad", phase_rad, "Phase uncertainty (rad)");

  auto* validate = app.add_subcommand("validate", "Re-derive and check a stored solution");
  std::string validate_path, target_name = "bsa";
  double validate_min = 1.0 - 1e-5;
  validate->add_option("solution", validate_path, "Solution or config JSON")->required()->check(CLI::ExistingFile);
  validate->add_option("--target", target_name, "bsa or identity");
  validate->add_option("--min-fidelity", validate_min, "Fidelity threshold");

  for (CLI::App* sub : {synth, spectra, bsa, jitter, validate}) add_globals(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*synth) rc = cmd_synth(g, problem_path, pso_path, encoding, min_fidelity, threads);
    if (*spectra) rc = cmd_spectra(g, spectra_path, input_bin, all_bins);
    if (*bsa) rc = cmd_bsa(g, bsa_path, state, counts);
    if (*jitter) rc = cmd_jitter(g, spacing_ghz, jitter_ps, phase_rad);
    if (*validate) rc = cmd_validate(g, validate_path, target_name, validate_min);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return rc;
}
