#pragma once

#include <map>
#include <vector>

#include "fbsa/encoding.hpp"
#include "fbsa/mode_transform.hpp"
#include "fbsa/rf_drive.hpp"
#include "fbsa/shaper_mask.hpp"

namespace fbsa {

/// EOM - pulse shaper - EOM frequency processor.
struct QfpConfig {
  FrequencyGrid grid;
  RfDrive eom1;
  ShaperMask shaper;
  RfDrive eom2;
  Encoding encoding = Encoding::kAdjacent;

  bool operator==(const QfpConfig&) const = default;
};

inline constexpr std::size_t kDefaultFftSamples = 1024;

/// Fourier coefficients d_j = (1/T) int_0^T exp(i phi(t)) exp(-i j dw t) dt,
/// computed by FFT over `samples` points; index j is stored at (j mod samples).
/// `samples` must be a power of two.
std::vector<Complex> eom_coefficients(const RfDrive& drive,
                                      std::size_t samples = kDefaultFftSamples);

/// Toeplitz scattering matrix E(m, n) = d_{m-n}, i.e.
/// a_out[n] = sum_m d_{n-m} a_in[m].
/// Throws std::invalid_argument when samples <= 2 * window dimension or is not
/// a power of two.
ModeTransform build_eom_operator(const RfDrive& drive, const FrequencyGrid& grid,
                                 std::size_t samples = kDefaultFftSamples);

/// Diagonal transmission amplitude * exp(i phase) per bin.
ModeTransform build_shaper_operator(const ShaperMask& mask, const FrequencyGrid& grid);

/// E2 * S * E1 with computational bins attached from config.encoding.
ModeTransform compose_qfp(const QfpConfig& config,
                          std::size_t samples = kDefaultFftSamples);

/// Overload for callers that build the three elements separately; all must
/// share one grid (std::invalid_argument otherwise).
ModeTransform compose_qfp(const ModeTransform& eom1, const ModeTransform& shaper,
                          const ModeTransform& eom2, Encoding encoding);

/// Output power per bin, |W(m, input_bin)|^2, for a monochromatic input.
/// Throws std::out_of_range if input_bin is outside the window.
std::map<int, double> classical_spectrum(const ModeTransform& w, int input_bin);

}  // namespace fbsa
