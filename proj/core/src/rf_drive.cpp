#include "fbsa/rf_drive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace fbsa {

RfDrive::RfDrive(std::vector<Tone> tones) : tones_(std::move(tones)) {
  std::set<int> seen;
  for (const Tone& tone : tones_) {
    if (tone.harmonic < 1) throw std::invalid_argument("tone harmonic must be a positive integer");
    if (!(tone.amplitude >= 0.0)) throw std::invalid_argument("tone amplitude must be >= 0");
    if (!std::isfinite(tone.phase)) throw std::invalid_argument("tone phase must be finite");
    if (!seen.insert(tone.harmonic).second) {
      throw std::invalid_argument("duplicate harmonic in RF drive");
    }
  }
}

double RfDrive::phase_at(double s) const {
  const double x = 2.0 * std::numbers::pi * s;
  double phi = 0.0;
  for (const Tone& tone : tones_) {
    phi += tone.amplitude * std::sin(tone.harmonic * x + tone.phase);
  }
  return phi;
}

std::vector<double> RfDrive::sample(std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = phase_at(static_cast<double>(i) / static_cast<double>(count));
  }
  return out;
}

double RfDrive::peak_deviation(std::size_t samples) const {
  double peak = 0.0;
  for (double phi : sample(samples)) peak = std::max(peak, std::abs(phi));
  return peak;
}

double RfDrive::amplitude_of(int harmonic) const {
  for (const Tone& tone : tones_) {
    if (tone.harmonic == harmonic) return tone.amplitude;
  }
  return 0.0;
}

}  // namespace fbsa
