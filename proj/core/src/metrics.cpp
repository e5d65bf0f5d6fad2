#include "fbsa/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace fbsa {

GateMetrics gate_metrics(const Matrix4c& wc, const Matrix4c& target, double infidelity_floor) {
  const double p = (wc.adjoint() * wc).trace().real() / 4.0;
  if (!(p >= 1e-15)) {
    throw DegenerateResult("success probability is zero; fidelity undefined");
  }
  const double overlap = std::norm((wc.adjoint() * target).trace());
  const double f = std::min(overlap / (16.0 * p), 1.0);
  const double c = p * std::log10(std::max(1.0 - f, infidelity_floor));
  return GateMetrics{f, p, c};
}

GateMetrics gate_metrics(const ModeTransform& w, const TargetUnitary& target,
                         double infidelity_floor) {
  if (!w.computational_bins || *w.computational_bins != target.bin_assignment) {
    throw std::invalid_argument("transform bin assignment does not match the target encoding");
  }
  return gate_metrics(w.computational_submatrix(), target.matrix, infidelity_floor);
}

double max_element_amplitude(const Matrix4c& wc) { return wc.cwiseAbs().maxCoeff(); }

double max_element_amplitude(const ModeTransform& w) {
  return max_element_amplitude(w.computational_submatrix());
}

double jitter_phase_bound(double delta_omega, double delta_t) {
  if (!(delta_omega > 0.0) || !(delta_t >= 0.0)) {
    throw std::invalid_argument("jitter bound needs positive spacing and non-negative time");
  }
  return delta_omega * delta_t;
}

double required_jitter(double delta_omega, double phase) {
  if (!(delta_omega > 0.0) || !(phase >= 0.0)) {
    throw std::invalid_argument("jitter bound needs positive spacing and non-negative phase");
  }
  return phase / delta_omega;
}

}  // namespace fbsa
