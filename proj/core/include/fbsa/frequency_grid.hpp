#pragma once

#include <cstddef>
#include <numbers>

namespace fbsa {

/// A uniform frequency-bin lattice omega_n = center + n * spacing, truncated to
/// the mode window [window_lo, window_hi]. Frequencies are stored in the units
/// they are specified in (GHz, THz) so that files round-trip exactly; the
/// angular accessors return rad/s.
struct FrequencyGrid {
  static constexpr int kDefaultGuard = 14;
  static constexpr int kComputationalLo = -1;
  static constexpr int kComputationalHi = 2;

  double spacing_ghz = 20.0;   // spacing / 2 pi
  double center_thz = 192.2;   // center / 2 pi
  int window_lo = kComputationalLo - kDefaultGuard;
  int window_hi = kComputationalHi + kDefaultGuard;

  /// Grid whose window spans the computational bins plus `guard` bins per side.
  static FrequencyGrid with_guard(int guard, double spacing_ghz = 20.0,
                                  double center_thz = 192.2);

  /// Angular bin spacing in rad/s.
  double spacing() const { return 2.0 * std::numbers::pi * spacing_ghz * 1e9; }
  /// Angular center frequency omega_0 in rad/s.
  double center() const { return 2.0 * std::numbers::pi * center_thz * 1e12; }

  std::size_t dimension() const {
    return static_cast<std::size_t>(window_hi - window_lo + 1);
  }
  bool contains(int bin) const { return bin >= window_lo && bin <= window_hi; }
  /// Row/column position of `bin` inside the window. Throws std::out_of_range.
  std::size_t index_of(int bin) const;
  /// Offset of bin n from the center frequency, in GHz.
  double offset_ghz(int bin) const { return bin * spacing_ghz; }

  /// Number of spectator bins between the window edge and the computational bins.
  int guard() const;

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;

  bool same_lattice(const FrequencyGrid& other) const;

  bool operator==(const FrequencyGrid&) const = default;
};

}  // namespace fbsa
