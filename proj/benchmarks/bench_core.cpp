#include <benchmark/benchmark.h>

#include <random>

#include "fbsa/synthesis.hpp"
#include "fbsa/two_photon.hpp"

using namespace fbsa;

namespace {

QfpConfig sample_config() {
  QfpConfig c;
  c.eom1 = RfDrive({Tone{1, 0.97, 4.28}, Tone{2, 1.99, 3.08}});
  c.eom2 = RfDrive({Tone{1, 0.97, 5.15}, Tone{2, 1.99, 0.06}});
  for (int b = -6; b <= 9; ++b) c.shaper.set(b, 0.37 * b);
  c.encoding = Encoding::kInterleaved;
  return c;
}

void BM_EomOperator(benchmark::State& state) {
  const RfDrive drive = sample_config().eom1;
  const FrequencyGrid grid;
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_eom_operator(drive, grid, samples));
}
BENCHMARK(BM_EomOperator)->Arg(128)->Arg(1024);

void BM_ComposeQfp(benchmark::State& state) {
  const QfpConfig c = sample_config();
  for (auto _ : state) benchmark::DoNotOptimize(compose_qfp(c));
}
BENCHMARK(BM_ComposeQfp);

void BM_SynthesisCost(benchmark::State& state) {
  SynthesisProblem problem;
  problem.target = target_unitary(Encoding::kInterleaved);
  problem.fft_samples = static_cast<std::size_t>(state.range(0));
  const ParameterCodec codec(problem);
  const std::vector<double> x = codec.encode(sample_config());
  for (auto _ : state) {
    const Matrix4c wc = computational_block(codec.decode(x), problem.fft_samples);
    benchmark::DoNotOptimize(gate_metrics(wc, problem.target.matrix, problem.infidelity_floor));
  }
}
BENCHMARK(BM_SynthesisCost)->Arg(256)->Arg(1024);

void BM_TwoPhotonPropagation(benchmark::State& state) {
  const auto w = compose_qfp(sample_config());
  const auto in = bell_state(BellKind::kPsiPlus, target_unitary(Encoding::kInterleaved));
  for (auto _ : state) benchmark::DoNotOptimize(propagate_two_photon(w, in));
}
BENCHMARK(BM_TwoPhotonPropagation);

void BM_CoincidencePattern(benchmark::State& state) {
  const auto w = compose_qfp(sample_config());
  const auto in = bell_state(BellKind::kPsiMinus, target_unitary(Encoding::kInterleaved));
  for (auto _ : state) benchmark::DoNotOptimize(coincidence_pattern(w, in));
}
BENCHMARK(BM_CoincidencePattern);

}  // namespace
BENCHMARK_MAIN();
