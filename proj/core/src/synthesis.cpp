#include "fbsa/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace fbsa {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phase) {
  double w = std::fmod(phase, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w >= kTwoPi ? 0.0 : w;
}

Complex coefficient(const std::vector<Complex>& d, int j) {
  const auto n = static_cast<int>(d.size());
  return d[static_cast<std::size_t>(((j % n) + n) % n)];
}

}  // namespace

void SynthesisProblem::validate() const {
  grid.validate();
  std::set<int> seen;
  for (int k : free_harmonics) {
    if (k < 1) throw std::invalid_argument("free harmonics must be positive");
    if (!seen.insert(k).second) throw std::invalid_argument("free harmonics must be distinct");
  }
  if (shaper_lo > shaper_hi) throw std::invalid_argument("shaper design range is empty");
  if (!grid.contains(shaper_lo) || !grid.contains(shaper_hi)) {
    throw std::invalid_argument("shaper design range must lie inside the grid window");
  }
  const int a0 = bin_of(target.bin_assignment, LogicalBin::kA0);
  if (a0 < shaper_lo || a0 > shaper_hi) {
    throw std::invalid_argument("shaper design range must contain the A0 gauge bin");
  }
  if (!(max_amplitude > 0.0)) throw std::invalid_argument("max_amplitude must be > 0");
  if (!(infidelity_floor > 0.0 && infidelity_floor < 1.0)) {
    throw std::invalid_argument("infidelity_floor must lie in (0, 1)");
  }
  for (double f : warmup_floors) {
    if (!(f > 0.0 && f < 1.0)) throw std::invalid_argument("warmup floors must lie in (0, 1)");
  }
}

ParameterCodec::ParameterCodec(const SynthesisProblem& problem)
    : harmonics_(problem.free_harmonics),
      gauge_bin_(bin_of(problem.target.bin_assignment, LogicalBin::kA0)),
      grid_(problem.grid),
      encoding_(problem.target.encoding) {
  problem.validate();
  for (int bin = problem.shaper_lo; bin <= problem.shaper_hi; ++bin) {
    if (bin != gauge_bin_) shaper_bins_.push_back(bin);
  }
  auto append = [&](std::size_t count, double hi, bool periodic) {
    box_.lower.insert(box_.lower.end(), count, 0.0);
    box_.upper.insert(box_.upper.end(), count, hi);
    box_.periodic.insert(box_.periodic.end(), count, periodic);
  };
  const std::size_t nh = harmonics_.size();
  for (int eom = 0; eom < 2; ++eom) {
    append(nh, problem.max_amplitude, false);
    append(nh, kTwoPi, problem.wrap_phases);
  }
  append(shaper_bins_.size(), kTwoPi, problem.wrap_phases);
}

QfpConfig ParameterCodec::decode(std::span<const double> x) const {
  if (x.size() != dimension()) throw std::invalid_argument("parameter vector has wrong dimension");
  std::vector<double> v(x.begin(), x.end());
  box_.clip(v);

  const std::size_t nh = harmonics_.size();
  auto drive_at = [&](std::size_t offset) {
    std::vector<Tone> tones;
    tones.reserve(nh);
    for (std::size_t h = 0; h < nh; ++h) {
      tones.push_back(Tone{harmonics_[h], v[offset + h], v[offset + nh + h]});
    }
    return RfDrive(std::move(tones));
  };

  QfpConfig config;
  config.grid = grid_;
  config.encoding = encoding_;
  config.eom1 = drive_at(0);
  config.eom2 = drive_at(2 * nh);
  config.shaper.set(gauge_bin_, 0.0);
  for (std::size_t i = 0; i < shaper_bins_.size(); ++i) {
    config.shaper.set(shaper_bins_[i], v[4 * nh + i]);
  }
  return config;
}

std::vector<double> ParameterCodec::encode(const QfpConfig& config) const {
  std::vector<double> x;
  x.reserve(dimension());
  for (const RfDrive* drive : {&config.eom1, &config.eom2}) {
    std::vector<double> amps, phases;
    for (int k : harmonics_) {
      double amp = 0.0, phase = 0.0;
      for (const Tone& tone : drive->tones()) {
        if (tone.harmonic == k) {
          amp = tone.amplitude;
          phase = tone.phase;
        }
      }
      amps.push_back(amp);
      phases.push_back(wrap_phase(phase));
    }
    x.insert(x.end(), amps.begin(), amps.end());
    x.insert(x.end(), phases.begin(), phases.end());
  }
  for (int bin : shaper_bins_) x.push_back(wrap_phase(config.shaper.phase(bin)));
  return x;
}

Matrix4c computational_block(const QfpConfig& config, std::size_t samples) {
  const std::vector<Complex> d1 = eom_coefficients(config.eom1, samples);
  const std::vector<Complex> d2 = eom_coefficients(config.eom2, samples);
  const FrequencyGrid& grid = config.grid;
  const int lo = FrequencyGrid::kComputationalLo;

  Matrix4c out = Matrix4c::Zero();
  for (int m = grid.window_lo; m <= grid.window_hi; ++m) {
    const Complex s = std::polar(config.shaper.amplitude(m), config.shaper.phase(m));
    for (int r = 0; r < 4; ++r) {
      const Complex left = coefficient(d2, lo + r - m) * s;
      for (int c = 0; c < 4; ++c) out(r, c) += left * coefficient(d1, m - (lo + c));
    }
  }
  return out;
}

SynthesisResult synthesize(const SynthesisProblem& problem, const PsoParams& params) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  const ParameterCodec codec(problem);

  auto objective_for = [&](double floor) -> Objective {
    return [&codec, &problem, floor](std::span<const double> x) {
      try {
        const Matrix4c wc = computational_block(codec.decode(x), problem.fft_samples);
        return gate_metrics(wc, problem.target.matrix, floor).cost;
      } catch (const DegenerateResult&) {
        return 0.0;
      }
    };
  };
  std::vector<double> floors = problem.warmup_floors;
  floors.push_back(problem.infidelity_floor);

  SynthesisResult result;
  SwarmRun best;
  for (int r = 0; r < params.restarts; ++r) {
    const std::uint64_t seed = params.seed + static_cast<std::uint64_t>(r);
    SwarmRun run;
    for (std::size_t stage = 0; stage < floors.size(); ++stage) {
      run = run_swarm(objective_for(floors[stage]), codec.bounds(), params, seed, run.personal_best,
                      static_cast<std::uint32_t>(stage));
    }
    result.restart_costs.push_back(run.best_cost);
    if (r == 0 || run.best_cost < best.best_cost) {
      best = std::move(run);
      result.seed_used = seed;
    }
  }

  result.best_config = codec.decode(best.best_position);
  result.trace = std::move(best.trace);
  result.infidelity_floor = problem.infidelity_floor;
  result.metrics = gate_metrics(compose_qfp(result.best_config), problem.target);
  result.shaper_only = problem.free_harmonics.empty() &&
                       !problem.target.matrix.isApprox(Matrix4c::Identity(), 1e-15);
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SynthesisResult constrained_synthesize(const SynthesisProblem& problem, const PsoParams& params,
                                       const std::vector<int>& harmonics) {
  for (int k : harmonics) {
    if (std::find(problem.free_harmonics.begin(), problem.free_harmonics.end(), k) ==
        problem.free_harmonics.end()) {
      throw std::invalid_argument("constraint harmonic " + std::to_string(k) +
                                  " is not in the problem's free harmonics");
    }
  }
  SynthesisProblem restricted = problem;
  restricted.free_harmonics = harmonics;
  return synthesize(restricted, params);
}

SolutionReport solution_report(const QfpConfig& config, const GateMetrics& metrics) {
  SolutionReport report;
  report.time_fraction.resize(kReportSamples);
  for (std::size_t i = 0; i < kReportSamples; ++i) {
    report.time_fraction[i] = static_cast<double>(i) / static_cast<double>(kReportSamples);
  }
  report.eom1_phase = config.eom1.sample(kReportSamples);
  report.eom2_phase = config.eom2.sample(kReportSamples);
  report.eom1_peak = config.eom1.peak_deviation();
  report.eom2_peak = config.eom2.peak_deviation();
  for (int bin = config.grid.window_lo; bin <= config.grid.window_hi; ++bin) {
    report.shaper_phase[bin] = config.shaper.phase(bin);
  }
  const Matrix4c wc = compose_qfp(config).computational_submatrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      report.amplitude[r][c] = std::abs(wc(r, c));
      report.phase[r][c] = std::arg(wc(r, c));
    }
  }
  report.max_amplitude = max_element_amplitude(wc);
  report.metrics = metrics;
  return report;
}

SolutionReport solution_report(const SynthesisResult& result) {
  return solution_report(result.best_config, result.metrics);
}

}  // namespace fbsa
