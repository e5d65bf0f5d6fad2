#pragma once

#include <vector>

namespace fbsa {

/// One sinusoidal component m * sin(k * dw * t + theta) of an EOM drive.
struct Tone {
  int harmonic = 1;
  double amplitude = 0.0;  // rad
  double phase = 0.0;      // rad

  bool operator==(const Tone&) const = default;
};

/// Periodic temporal phase phi(t) = sum_k m_k sin(k * dw * t + theta_k) with
/// period T = 2 pi / dw. An empty tone list is the undriven modulator.
class RfDrive {
 public:
  RfDrive() = default;
  explicit RfDrive(std::vector<Tone> tones);

  static RfDrive single(int harmonic, double amplitude, double phase = 0.0) {
    return RfDrive({Tone{harmonic, amplitude, phase}});
  }

  const std::vector<Tone>& tones() const { return tones_; }
  bool empty() const { return tones_.empty(); }

  /// phi evaluated at fraction s of one period (s in [0, 1)).
  double phase_at(double s) const;

  /// Samples phi at `count` uniformly spaced points over one period.
  std::vector<double> sample(std::size_t count) const;

  /// max_t |phi(t)| by dense sampling.
  double peak_deviation(std::size_t samples = 4096) const;

  /// Amplitude of the tone at `harmonic`, 0 if absent.
  double amplitude_of(int harmonic) const;

  bool operator==(const RfDrive&) const = default;

 private:
  std::vector<Tone> tones_;
};

}  // namespace fbsa
