#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fbsa/serialization.hpp"
#include "fbsa/synthesis.hpp"
#include "test_paths.hpp"

namespace fbsa {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PsoParams small_params(std::uint64_t seed = 3) {
  PsoParams p;
  p.swarm_size = 12;
  p.iterations = 40;
  p.restarts = 2;
  p.seed = seed;
  return p;
}

SynthesisProblem small_problem() {
  SynthesisProblem p;
  p.shaper_lo = -2;
  p.shaper_hi = 3;
  p.fft_samples = 128;
  return p;
}

QfpConfig load_golden(const std::filesystem::path& path) {
  return qfp_config_from_json(read_json_file(path).at("config"));
}

TEST(Codec, DefaultDimension) {
  const ParameterCodec codec{SynthesisProblem{}};
  EXPECT_EQ(codec.dimension(), 2u * 2u * 2u + 16u - 1u);
  EXPECT_EQ(codec.gauge_bin(), -1);
  EXPECT_EQ(codec.shaper_bins().size(), 15u);
}

TEST(Codec, BoundsFollowLayout) {
  const ParameterCodec codec{SynthesisProblem{}};
  const auto& box = codec.bounds();
  for (std::size_t d = 0; d < codec.dimension(); ++d) {
    EXPECT_EQ(box.lower[d], 0.0);
    const bool amplitude = d < 2 || (d >= 4 && d < 6);
    EXPECT_EQ(box.upper[d], amplitude ? 5.0 : kTwoPi) << d;
  }
}

TEST(Codec, ZeroVectorDecodesToIdentity) {
  const SynthesisProblem problem;
  const ParameterCodec codec{problem};
  const std::vector<double> zeros(codec.dimension(), 0.0);
  const auto config = codec.decode(zeros);
  EXPECT_EQ(config.eom1.peak_deviation(), 0.0);
  EXPECT_EQ(config.eom2.peak_deviation(), 0.0);
  const auto w = compose_qfp(config);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(w.matrix.rows(), w.matrix.cols());
  EXPECT_LT((w.matrix - id).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Codec, EncodeDecodeRoundTrip) {
  const ParameterCodec codec{SynthesisProblem{}};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> x(codec.dimension());
    for (std::size_t d = 0; d < x.size(); ++d) {
      std::uniform_real_distribution<double> u(codec.bounds().lower[d], codec.bounds().upper[d]);
      x[d] = u(rng);
    }
    const auto back = codec.encode(codec.decode(x));
    ASSERT_EQ(back.size(), x.size());
    for (std::size_t d = 0; d < x.size(); ++d) EXPECT_NEAR(back[d], x[d], 1e-12) << d;
  }
}

TEST(Codec, DecodeClipsOutOfBounds) {
  const ParameterCodec codec{SynthesisProblem{}};
  std::vector<double> x(codec.dimension(), 0.0);
  x[0] = 9.0;
  x[1] = -1.0;
  const auto config = codec.decode(x);
  EXPECT_EQ(config.eom1.amplitude_of(1), 5.0);
  EXPECT_EQ(config.eom1.amplitude_of(2), 0.0);
}

TEST(Codec, GaugeBinPinned) {
  const ParameterCodec codec{SynthesisProblem{}};
  std::vector<double> x(codec.dimension(), 1.0);
  const auto config = codec.decode(x);
  EXPECT_EQ(config.shaper.phase(-1), 0.0);
  EXPECT_EQ(config.shaper.phase(0), 1.0);
  EXPECT_EQ(config.shaper.phase(10), 0.0);
}

TEST(Problem, Validation) {
  SynthesisProblem p;
  EXPECT_NO_THROW(p.validate());
  p.shaper_lo = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = SynthesisProblem{};
  p.shaper_hi = 40;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = SynthesisProblem{};
  p.max_amplitude = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = SynthesisProblem{};
  p.free_harmonics = {1, 1};
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = SynthesisProblem{};
  p.warmup_floors = {1e-3, 0.0};
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Params, Validation) {
  PsoParams p;
  EXPECT_NO_THROW(p.validate());
  p.swarm_size = 1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = PsoParams{};
  p.inertia = 1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = PsoParams{};
  p.social = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(ComputationalBlock, MatchesFullComposition) {
  const ParameterCodec codec{SynthesisProblem{}};
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x(codec.dimension());
    for (std::size_t d = 0; d < x.size(); ++d) {
      x[d] = std::uniform_real_distribution<double>(0.0, codec.bounds().upper[d])(rng);
    }
    const auto config = codec.decode(x);
    const Matrix4c block = computational_block(config);
    const Matrix4c full = compose_qfp(config).computational_submatrix();
    EXPECT_LT((block - full).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(GateMetrics, ShaperGaugeInvariance) {
  for (const auto& path : {test_paths::golden_adjacent(), test_paths::golden_interleaved()}) {
    const QfpConfig config = load_golden(path);
    const auto target = target_unitary(config.encoding);
    const auto base = gate_metrics(compose_qfp(config), target);
    QfpConfig shifted = config;
    for (int b = config.grid.window_lo; b <= config.grid.window_hi; ++b) {
      shifted.shaper.set_phase(b, config.shaper.phase(b) + 1.234);
    }
    const auto moved = gate_metrics(compose_qfp(shifted), target);
    EXPECT_NEAR(moved.fidelity, base.fidelity, 1e-12);
    EXPECT_NEAR(moved.success_prob, base.success_prob, 1e-12);
  }
}

TEST(Pso, MinimizesSphere) {
  SearchBox box{std::vector<double>(4, -3.0), std::vector<double>(4, 3.0), {}};
  PsoParams p;
  p.swarm_size = 20;
  p.iterations = 200;
  const auto run = run_swarm(
      [](std::span<const double> x) {
        double s = 0;
        for (double v : x) s += (v - 1.0) * (v - 1.0);
        return s;
      },
      box, p, 11);
  EXPECT_LT(run.best_cost, 1e-8);
  EXPECT_EQ(run.trace.size(), 201u);
}

TEST(Pso, NanCostsNeverWin) {
  SearchBox box{{0.0}, {1.0}, {}};
  PsoParams p;
  p.swarm_size = 5;
  p.iterations = 10;
  const auto run = run_swarm(
      [](std::span<const double> x) { return x[0] < 0.5 ? std::nan("") : x[0]; }, box, p, 2);
  EXPECT_GE(run.best_position[0], 0.5);
}

TEST(Pso, PeriodicDimensionsWrap) {
  SearchBox box{{0.0, 0.0}, {1.0, kTwoPi}, {false, true}};
  std::vector<double> x{1.5, kTwoPi + 0.25};
  box.clip(x);
  EXPECT_EQ(x[0], 1.0);
  EXPECT_NEAR(x[1], 0.25, 1e-15);
}

TEST(Pso, PeriodicOptimumOnTheSeam) {
  SearchBox box{{0.0, 0.0}, {kTwoPi, kTwoPi}, {true, true}};
  PsoParams p;
  p.swarm_size = 10;
  p.iterations = 150;
  const auto run = run_swarm(
      [](std::span<const double> x) { return 2.0 - std::cos(x[0]) - std::cos(x[1]); }, box, p, 4);
  EXPECT_LT(run.best_cost, 1e-10);
  for (double v : run.best_position) EXPECT_LT(std::min(v, kTwoPi - v), 1e-4);
}

TEST(Pso, StartPositionsAreUsed) {
  SearchBox box{{-1.0}, {1.0}, {}};
  PsoParams p;
  p.swarm_size = 4;
  p.iterations = 0;
  const std::vector<std::vector<double>> start{{0.25}};
  const auto run = run_swarm([](std::span<const double> x) { return x[0]; }, box, p, 1, start);
  EXPECT_EQ(run.best_position[0], 0.25);
  EXPECT_EQ(run.personal_best.size(), 4u);
}

TEST(Synthesis, DeterministicForEqualSeeds) {
  const auto problem = small_problem();
  const auto a = synthesize(problem, small_params());
  const auto b = synthesize(problem, small_params());
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.best_config, b.best_config);
  EXPECT_EQ(a.restart_costs, b.restart_costs);
  EXPECT_EQ(canonical_dump(to_json(a)), canonical_dump(to_json(b)));
  const auto c = synthesize(problem, small_params(10));
  EXPECT_NE(a.trace, c.trace);
}

TEST(Synthesis, ThreadCountDoesNotChangeResult) {
  const auto problem = small_problem();
  auto threaded = small_params();
  threaded.threads = 3;
  const auto a = synthesize(problem, small_params());
  const auto b = synthesize(problem, threaded);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.best_config, b.best_config);
}

TEST(Synthesis, TraceIsMonotoneAndConsistent) {
  const auto problem = small_problem();
  const auto params = small_params();
  const auto r = synthesize(problem, params);
  ASSERT_EQ(r.trace.size(), static_cast<std::size_t>(params.iterations + 1));
  for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_LE(r.trace[i], r.trace[i - 1]);
  EXPECT_EQ(r.restart_costs.size(), 2u);
  EXPECT_EQ(r.trace.back(), *std::min_element(r.restart_costs.begin(), r.restart_costs.end()));
  EXPECT_TRUE(r.seed_used == params.seed || r.seed_used == params.seed + 1);

  const auto again = gate_metrics(compose_qfp(r.best_config), problem.target);
  EXPECT_NEAR(again.fidelity, r.metrics.fidelity, 1e-12);
  EXPECT_NEAR(again.success_prob, r.metrics.success_prob, 1e-12);
  EXPECT_NEAR(again.cost, r.metrics.cost, 1e-12);
}

TEST(Synthesis, BestConfigIsFeasible) {
  const auto problem = small_problem();
  const auto r = synthesize(problem, small_params());
  for (const RfDrive* d : {&r.best_config.eom1, &r.best_config.eom2}) {
    ASSERT_EQ(d->tones().size(), 2u);
    for (const Tone& t : d->tones()) {
      EXPECT_GE(t.amplitude, 0.0);
      EXPECT_LE(t.amplitude, problem.max_amplitude);
      EXPECT_GE(t.phase, 0.0);
      EXPECT_LE(t.phase, kTwoPi);
    }
  }
  for (const auto& [bin, e] : r.best_config.shaper.entries()) {
    EXPECT_GE(bin, problem.shaper_lo);
    EXPECT_LE(bin, problem.shaper_hi);
    EXPECT_EQ(e.amplitude, 1.0);
  }
  EXPECT_EQ(r.best_config.shaper.phase(-1), 0.0);
}

TEST(Synthesis, IdentityTargetReachesZeroModulation) {
  SynthesisProblem problem;
  problem.target = identity_target(Encoding::kAdjacent);
  problem.infidelity_floor = 1e-12;
  PsoParams params;
  params.swarm_size = 30;
  params.iterations = 400;
  params.restarts = 1;
  const auto r = synthesize(problem, params);
  EXPECT_GE(r.metrics.fidelity, 1.0 - 1e-9);
  EXPECT_GE(r.metrics.success_prob, 1.0 - 1e-6);
  EXPECT_FALSE(r.shaper_only);
}

TEST(ConstrainedSynthesis, RejectsHarmonicsOutsideProblem) {
  EXPECT_THROW(constrained_synthesize(SynthesisProblem{}, small_params(), {3}),
               std::invalid_argument);
}

TEST(ConstrainedSynthesis, RestrictsTones) {
  const auto r = constrained_synthesize(small_problem(), small_params(), {2});
  for (const RfDrive* d : {&r.best_config.eom1, &r.best_config.eom2}) {
    ASSERT_EQ(d->tones().size(), 1u);
    EXPECT_EQ(d->tones()[0].harmonic, 2);
  }
  EXPECT_FALSE(r.shaper_only);
}

TEST(ConstrainedSynthesis, EmptyToneSet) {
  SynthesisProblem problem = small_problem();
  problem.target = identity_target(Encoding::kAdjacent);
  const auto id = constrained_synthesize(problem, small_params(), {});
  EXPECT_FALSE(id.shaper_only);
  EXPECT_TRUE(id.best_config.eom1.empty());
  EXPECT_NEAR(id.metrics.success_prob, 1.0, 1e-12);

  const auto bsa = constrained_synthesize(small_problem(), small_params(), {});
  EXPECT_TRUE(bsa.shaper_only);
  EXPECT_NEAR(bsa.metrics.success_prob, 1.0, 1e-12);
  EXPECT_LT(bsa.metrics.fidelity, 0.99);
}

TEST(Report, IdentityConfig) {
  QfpConfig config;
  const auto report = solution_report(config, gate_metrics(compose_qfp(config), identity_target(Encoding::kAdjacent)));
  ASSERT_EQ(report.time_fraction.size(), kReportSamples);
  EXPECT_EQ(report.time_fraction[1], 1.0 / kReportSamples);
  for (double v : report.eom1_phase) EXPECT_EQ(v, 0.0);
  for (double v : report.eom2_phase) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(report.shaper_phase.size(), 32u);
  for (const auto& [bin, v] : report.shaper_phase) EXPECT_EQ(v, 0.0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(report.amplitude[r][c], r == c ? 1.0 : 0.0, 1e-14);
  EXPECT_NEAR(report.max_amplitude, 1.0, 1e-14);
  EXPECT_NEAR(report.metrics.fidelity, 1.0, 1e-14);
}

TEST(Report, GoldenAdjacentIsPureSecondHarmonic) {
  const QfpConfig config = load_golden(test_paths::golden_adjacent());
  const auto report = solution_report(config, gate_metrics(compose_qfp(config), target_unitary(Encoding::kAdjacent)));
  EXPECT_LE(config.eom1.amplitude_of(1), 1e-2);
  EXPECT_LE(config.eom2.amplitude_of(1), 1e-2);
  EXPECT_NEAR(report.eom1_peak, config.eom1.peak_deviation(), 1e-3);
}

TEST(Report, JsonRoundTrip) {
  for (const auto& path : {test_paths::golden_adjacent(), test_paths::golden_interleaved()}) {
    const QfpConfig config = load_golden(path);
    const auto report = solution_report(config, gate_metrics(compose_qfp(config), target_unitary(config.encoding)));
    const auto back = solution_report_from_json(Json::parse(canonical_dump(to_json(report))));
    EXPECT_EQ(back, report);
  }
}

}  // namespace
}  // namespace fbsa
