#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fbsa/metrics.hpp"
#include "fbsa/pso.hpp"
#include "fbsa/qfp.hpp"
#include "fbsa/targets.hpp"

namespace fbsa {

/// Search space for an EOM - shaper - EOM design against a 4x4 target.
struct SynthesisProblem {
  TargetUnitary target = target_unitary(Encoding::kAdjacent);
  FrequencyGrid grid;
  /// RF harmonics each EOM may use.
  std::vector<int> free_harmonics{1, 2};
  /// Inclusive range of shaper bins with free phase; other bins stay at 0.
  int shaper_lo = -6;
  int shaper_hi = 9;
  double max_amplitude = 5.0;  // rad, per tone
  /// Infidelity floor inside the optimization cost. Once 1 - F drops below
  /// it, only success probability is rewarded.
  double infidelity_floor = 1e-6;
  /// Floors of warm-up swarms run before the final one, each seeded with the
  /// previous swarm's personal bests. Empty means a single swarm.
  std::vector<double> warmup_floors{1e-3};
  std::size_t fft_samples = kDefaultFftSamples;
  /// Treat phase coordinates as periodic during the search instead of clipping.
  bool wrap_phases = true;

  void validate() const;
};

/// Maps between a bounded real vector and a QfpConfig.
///
/// Layout: [eom1 amplitudes, eom1 phases, eom2 amplitudes, eom2 phases,
/// shaper phases]. Tone entries follow free_harmonics order. The shaper block
/// covers the design bins except A0, whose phase is pinned to 0 to remove the
/// global-phase gauge freedom.
class ParameterCodec {
 public:
  explicit ParameterCodec(const SynthesisProblem& problem);

  std::size_t dimension() const { return box_.dimension(); }
  const SearchBox& bounds() const { return box_; }
  int gauge_bin() const { return gauge_bin_; }
  const std::vector<int>& shaper_bins() const { return shaper_bins_; }

  /// Out-of-bounds components are clipped before use.
  QfpConfig decode(std::span<const double> x) const;
  /// Phases are wrapped into [0, 2 pi); the gauge bin's phase is ignored.
  std::vector<double> encode(const QfpConfig& config) const;

 private:
  std::vector<int> harmonics_;
  std::vector<int> shaper_bins_;
  int gauge_bin_;
  FrequencyGrid grid_;
  Encoding encoding_;
  SearchBox box_;
};

/// Computational 4x4 block of the QFP for `config`, built from only the rows
/// and columns that reach the computational bins. Equals
/// compose_qfp(config).computational_submatrix().
Matrix4c computational_block(const QfpConfig& config, std::size_t samples = kDefaultFftSamples);

struct SynthesisResult {
  QfpConfig best_config;
  /// gate_metrics(compose_qfp(best_config), target) with the default floor.
  GateMetrics metrics;
  /// Best cost of the winning restart's final swarm, one entry per iteration
  /// (plus the initial swarm). Non-increasing.
  std::vector<double> trace;
  std::uint64_t seed_used = 0;
  double wall_time = 0.0;  // seconds
  std::vector<double> restart_costs;
  /// Set when the search had no RF tones to work with and the target is not
  /// the identity.
  bool shaper_only = false;
  double infidelity_floor = 1e-6;
};

/// Runs params.restarts independent searches (restart r seeded with seed + r)
/// and keeps the lowest final cost; ties keep the earlier restart. Each
/// search is one swarm per warm-up floor followed by one at infidelity_floor.
SynthesisResult synthesize(const SynthesisProblem& problem, const PsoParams& params);

/// synthesize() with each EOM limited to `harmonics`, which must be a subset of
/// problem.free_harmonics (std::invalid_argument otherwise).
SynthesisResult constrained_synthesize(const SynthesisProblem& problem, const PsoParams& params,
                                       const std::vector<int>& harmonics);

/// Data behind a figure of a synthesized design: drive waveforms over one RF
/// period, shaper phases, the computational matrix in polar form, and metrics.
struct SolutionReport {
  std::vector<double> time_fraction;
  std::vector<double> eom1_phase;
  std::vector<double> eom2_phase;
  double eom1_peak = 0.0;
  double eom2_peak = 0.0;
  std::map<int, double> shaper_phase;
  std::array<std::array<double, 4>, 4> amplitude{};
  std::array<std::array<double, 4>, 4> phase{};
  double max_amplitude = 0.0;
  GateMetrics metrics;

  bool operator==(const SolutionReport&) const = default;
};

inline constexpr std::size_t kReportSamples = 1024;

SolutionReport solution_report(const SynthesisResult& result);
SolutionReport solution_report(const QfpConfig& config, const GateMetrics& metrics);

}  // namespace fbsa
