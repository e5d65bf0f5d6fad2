#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fbsa/metrics.hpp"
#include "fbsa/two_photon.hpp"

namespace fbsa {
namespace {

constexpr double kPi = std::numbers::pi;
const double kH = 1.0 / std::sqrt(2.0);

Matrix4c random_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 0.3);
  Matrix4c m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

TEST(TargetUnitary, AdjacentMatrixAndAssignment) {
  const auto t = target_unitary(Encoding::kAdjacent);
  Matrix4c expected;
  expected << kH, 0, kH, 0, 0, kH, 0, kH, kH, 0, -kH, 0, 0, kH, 0, -kH;
  EXPECT_EQ(t.matrix, expected);
  EXPECT_EQ(t.bin_assignment, (BinAssignment{-1, 0, 1, 2}));
}

TEST(TargetUnitary, InterleavedMatrixAndAssignment) {
  const auto t = target_unitary(Encoding::kInterleaved);
  Matrix4c expected;
  expected << kH, kH, 0, 0, kH, -kH, 0, 0, 0, 0, kH, kH, 0, 0, kH, -kH;
  EXPECT_EQ(t.matrix, expected);
  EXPECT_EQ(t.bin_assignment, (BinAssignment{-1, 1, 0, 2}));
}

TEST(TargetUnitary, BothAreUnitary) {
  for (Encoding e : {Encoding::kAdjacent, Encoding::kInterleaved}) {
    const Matrix4c u = target_unitary(e).matrix;
    EXPECT_LT((u.adjoint() * u - Matrix4c::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(TargetUnitary, HadamardsActOnTheLogicalPairs) {
  // Each Hadamard mixes A_i with B_i for the encoding's assignment.
  for (Encoding e : {Encoding::kAdjacent, Encoding::kInterleaved}) {
    const auto t = target_unitary(e);
    auto pos = [&](LogicalBin b) { return bin_of(t.bin_assignment, b) + 1; };
    EXPECT_NEAR(std::abs(t.matrix(pos(LogicalBin::kA0), pos(LogicalBin::kB0))), kH, 1e-15);
    EXPECT_NEAR(std::abs(t.matrix(pos(LogicalBin::kA1), pos(LogicalBin::kB1))), kH, 1e-15);
    EXPECT_EQ(std::abs(t.matrix(pos(LogicalBin::kA0), pos(LogicalBin::kA1))), 0.0);
  }
}

TEST(GateMetrics, ExactTargetIsClamped) {
  const auto t = target_unitary(Encoding::kAdjacent);
  const auto m = gate_metrics(t.matrix, t.matrix);
  EXPECT_NEAR(m.fidelity, 1.0, 1e-15);
  EXPECT_NEAR(m.success_prob, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(m.cost, -12.0);
}

TEST(GateMetrics, ScalingLaw) {
  const auto t = target_unitary(Encoding::kInterleaved);
  const auto m = gate_metrics(Matrix4c(0.9 * t.matrix), t.matrix);
  EXPECT_NEAR(m.fidelity, 1.0, 1e-15);
  EXPECT_NEAR(m.success_prob, 0.81, 1e-15);
  const Complex g = std::polar(0.55, 0.7);
  const auto mc = gate_metrics(Matrix4c(g * t.matrix), t.matrix);
  EXPECT_NEAR(mc.fidelity, 1.0, 1e-15);
  EXPECT_NEAR(mc.success_prob, std::norm(g), 1e-15);
}

TEST(GateMetrics, GlobalPhaseInvariance) {
  std::mt19937_64 rng(1);
  const auto t = target_unitary(Encoding::kAdjacent);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4c w = random_matrix(rng);
    const double alpha = 2 * kPi * trial / 50.0;
    const auto a = gate_metrics(w, t.matrix);
    const auto b = gate_metrics(Matrix4c(std::polar(1.0, alpha) * w), t.matrix);
    EXPECT_NEAR(a.fidelity, b.fidelity, 1e-12);
    EXPECT_NEAR(a.success_prob, b.success_prob, 1e-12);
  }
}

TEST(GateMetrics, FidelityBoundedAndCostMonotone) {
  std::mt19937_64 rng(2);
  const auto t = target_unitary(Encoding::kAdjacent);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = gate_metrics(random_matrix(rng), t.matrix);
    EXPECT_GE(m.fidelity, 0.0);
    EXPECT_LE(m.fidelity, 1.0);
    EXPECT_LE(m.cost, 0.0);
  }
  // At fixed P, moving W toward U raises F and lowers C.
  const Matrix4c off = Matrix4c::Identity();
  double last_cost = 1.0, last_f = -1.0;
  for (double s = 0.0; s <= 1.0; s += 0.1) {
    Matrix4c w = (1 - s) * off + s * t.matrix;
    w *= 1.0 / std::sqrt((w.adjoint() * w).trace().real() / 4);  // P = 1
    const auto m = gate_metrics(w, t.matrix);
    EXPECT_GE(m.fidelity, last_f);
    EXPECT_LE(m.cost, last_cost);
    last_f = m.fidelity;
    last_cost = m.cost;
  }
}

TEST(GateMetrics, CustomFloor) {
  const auto t = target_unitary(Encoding::kAdjacent);
  EXPECT_DOUBLE_EQ(gate_metrics(t.matrix, t.matrix, 1e-6).cost, -6.0);
}

TEST(GateMetrics, ZeroMatrixIsDegenerate) {
  const auto t = target_unitary(Encoding::kAdjacent);
  EXPECT_THROW(gate_metrics(Matrix4c::Zero(), t.matrix), DegenerateResult);
}

TEST(GateMetrics, RejectsMisalignedAssignment) {
  const auto adj = target_unitary(Encoding::kAdjacent);
  const auto inter = target_unitary(Encoding::kInterleaved);
  const ModeTransform w = embed_target(adj, FrequencyGrid{});
  EXPECT_NO_THROW(gate_metrics(w, adj));
  EXPECT_THROW(gate_metrics(w, inter), std::invalid_argument);
  ModeTransform bare = ModeTransform::identity(FrequencyGrid{});
  EXPECT_THROW(gate_metrics(bare, adj), std::invalid_argument);
}

TEST(MaxElementAmplitude, IdealAndScaled) {
  const auto t = target_unitary(Encoding::kAdjacent);
  EXPECT_NEAR(max_element_amplitude(t.matrix), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(max_element_amplitude(Matrix4c(std::sqrt(0.9739) * t.matrix)), 0.6978, 5e-5);
}

TEST(Jitter, PiAtTenGigahertzIsFiftyPicoseconds) {
  const double dw = 2 * kPi * 10e9;
  EXPECT_NEAR(required_jitter(dw, kPi), 50e-12, 1e-24);
  EXPECT_NEAR(jitter_phase_bound(dw, 50e-12), kPi, 1e-15);
  EXPECT_EQ(jitter_phase_bound(dw, 0.0), 0.0);
  EXPECT_NEAR(required_jitter(2 * kPi * 20e9, kPi), 25e-12, 1e-24);
  EXPECT_THROW(required_jitter(0.0, kPi), std::invalid_argument);
}

}  // namespace
}  // namespace fbsa
