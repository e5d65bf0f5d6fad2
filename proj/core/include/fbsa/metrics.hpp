#pragma once

#include <stdexcept>

#include "fbsa/mode_transform.hpp"
#include "fbsa/targets.hpp"

namespace fbsa {

inline constexpr double kDefaultInfidelityFloor = 1e-12;

/// Modal quality of a sub-unitary 4x4 transformation against a target.
struct GateMetrics {
  double fidelity = 0.0;
  double success_prob = 0.0;
  double cost = 0.0;

  bool operator==(const GateMetrics&) const = default;
};

/// Raised when success probability is too small for fidelity to be defined.
class DegenerateResult : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F = |Tr(Wc^H U)|^2 / (16 P), P = Tr(Wc^H Wc) / 4,
/// C = P log10(max(1 - F, infidelity_floor)).
/// Throws DegenerateResult if P < 1e-15.
GateMetrics gate_metrics(const Matrix4c& wc, const Matrix4c& target,
                         double infidelity_floor = kDefaultInfidelityFloor);

/// Requires w.computational_bins to equal target.bin_assignment
/// (std::invalid_argument otherwise).
GateMetrics gate_metrics(const ModeTransform& w, const TargetUnitary& target,
                         double infidelity_floor = kDefaultInfidelityFloor);

/// Largest |entry| of the computational submatrix.
double max_element_amplitude(const ModeTransform& w);
double max_element_amplitude(const Matrix4c& wc);

/// Phase uncertainty dw * dt accumulated by a timing error dt between
/// photons separated by dw (rad/s).
double jitter_phase_bound(double delta_omega, double delta_t);
/// Timing resolution dt for which dw * dt equals `phase`.
double required_jitter(double delta_omega, double phase);

}  // namespace fbsa
