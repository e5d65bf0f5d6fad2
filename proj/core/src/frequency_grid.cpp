#include "fbsa/frequency_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fbsa {

FrequencyGrid FrequencyGrid::with_guard(int guard, double spacing_ghz, double center_thz) {
  if (guard < 0) throw std::invalid_argument("guard must be non-negative");
  FrequencyGrid grid;
  grid.spacing_ghz = spacing_ghz;
  grid.center_thz = center_thz;
  grid.window_lo = kComputationalLo - guard;
  grid.window_hi = kComputationalHi + guard;
  grid.validate();
  return grid;
}

std::size_t FrequencyGrid::index_of(int bin) const {
  if (!contains(bin)) {
    throw std::out_of_range("bin " + std::to_string(bin) + " outside window [" +
                            std::to_string(window_lo) + ", " +
                            std::to_string(window_hi) + "]");
  }
  return static_cast<std::size_t>(bin - window_lo);
}

int FrequencyGrid::guard() const {
  return std::min(kComputationalLo - window_lo, window_hi - kComputationalHi);
}

void FrequencyGrid::validate() const {
  if (!(spacing_ghz > 0.0) || !std::isfinite(spacing_ghz)) throw std::invalid_argument("grid spacing must be positive");
  if (window_lo >= window_hi) throw std::invalid_argument("grid window is empty");
  if (!contains(kComputationalLo) || !contains(kComputationalHi)) {
    throw std::invalid_argument("grid window must contain the computational bins -1..2");
  }
}

bool FrequencyGrid::same_lattice(const FrequencyGrid& other) const {
  return spacing_ghz == other.spacing_ghz && window_lo == other.window_lo &&
         window_hi == other.window_hi;
}

}  // namespace fbsa
