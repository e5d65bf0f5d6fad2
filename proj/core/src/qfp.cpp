#include "fbsa/qfp.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/FFT>

namespace fbsa {
namespace {

void check_samples(std::size_t samples) {
  if (samples == 0 || !std::has_single_bit(samples)) {
    throw std::invalid_argument("FFT sample count must be a power of two");
  }
}

}  // namespace

std::vector<Complex> eom_coefficients(const RfDrive& drive, std::size_t samples) {
  check_samples(samples);
  std::vector<Complex> field(samples);
  const std::vector<double> phi = drive.sample(samples);
  for (std::size_t i = 0; i < samples; ++i) field[i] = std::polar(1.0, phi[i]);

  thread_local Eigen::FFT<double> fft;
  std::vector<Complex> spectrum;
  fft.fwd(spectrum, field);
  const double scale = 1.0 / static_cast<double>(samples);
  for (Complex& c : spectrum) c *= scale;
  return spectrum;
}

ModeTransform build_eom_operator(const RfDrive& drive, const FrequencyGrid& grid,
                                 std::size_t samples) {
  grid.validate();
  check_samples(samples);
  const std::size_t dim = grid.dimension();
  if (samples <= 2 * dim) {
    throw std::invalid_argument("FFT sample count " + std::to_string(samples) +
                                " must exceed twice the window dimension " +
                                std::to_string(dim));
  }
  const std::vector<Complex> d = eom_coefficients(drive, samples);
  const auto n = static_cast<Eigen::Index>(dim);
  const auto ns = static_cast<std::ptrdiff_t>(samples);

  ModeTransform out{grid, Eigen::MatrixXcd(n, n), std::nullopt};
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::ptrdiff_t j = ((r - c) % ns + ns) % ns;
      out.matrix(r, c) = d[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

ModeTransform build_shaper_operator(const ShaperMask& mask, const FrequencyGrid& grid) {
  ModeTransform out = ModeTransform::identity(grid);
  for (const auto& [bin, entry] : mask.entries()) {
    if (!grid.contains(bin)) continue;
    const auto i = static_cast<Eigen::Index>(grid.index_of(bin));
    out.matrix(i, i) = std::polar(entry.amplitude, entry.phase);
  }
  return out;
}

ModeTransform compose_qfp(const ModeTransform& eom1, const ModeTransform& shaper,
                          const ModeTransform& eom2, Encoding encoding) {
  if (!eom1.grid.same_lattice(shaper.grid) || !eom1.grid.same_lattice(eom2.grid)) {
    throw std::invalid_argument("QFP elements must share one frequency grid");
  }
  ModeTransform out{eom1.grid, eom2.matrix * shaper.matrix * eom1.matrix,
                    bin_assignment(encoding)};
  return out;
}

ModeTransform compose_qfp(const QfpConfig& config, std::size_t samples) {
  return compose_qfp(build_eom_operator(config.eom1, config.grid, samples),
                     build_shaper_operator(config.shaper, config.grid),
                     build_eom_operator(config.eom2, config.grid, samples), config.encoding);
}

std::map<int, double> classical_spectrum(const ModeTransform& w, int input_bin) {
  const auto col = static_cast<Eigen::Index>(w.grid.index_of(input_bin));
  std::map<int, double> out;
  for (int bin = w.grid.window_lo; bin <= w.grid.window_hi; ++bin) {
    out[bin] = std::norm(w.matrix(static_cast<Eigen::Index>(w.grid.index_of(bin)), col));
  }
  return out;
}

}  // namespace fbsa
