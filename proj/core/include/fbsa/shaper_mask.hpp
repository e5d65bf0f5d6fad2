#pragma once

#include <map>

namespace fbsa {

/// Per-bin complex transmission of a line-by-line pulse shaper. Bins not
/// listed pass with unit amplitude and zero phase.
class ShaperMask {
 public:
  struct Entry {
    double phase = 0.0;      // rad
    double amplitude = 1.0;  // in [0, 1]

    bool operator==(const Entry&) const = default;
  };

  ShaperMask() = default;

  /// Throws std::invalid_argument if amplitude is outside [0, 1].
  void set(int bin, double phase, double amplitude = 1.0);
  void set_phase(int bin, double phase) { set(bin, phase, amplitude(bin)); }

  double phase(int bin) const;
  double amplitude(int bin) const;

  const std::map<int, Entry>& entries() const { return entries_; }
  bool phase_only() const;

  bool operator==(const ShaperMask&) const = default;

 private:
  std::map<int, Entry> entries_;
};

}  // namespace fbsa
