#include "fbsa/shaper_mask.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fbsa {

void ShaperMask::set(int bin, double phase, double amplitude) {
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
    throw std::invalid_argument("shaper amplitude for bin " + std::to_string(bin) +
                                " must lie in [0, 1]");
  }
  if (!std::isfinite(phase)) throw std::invalid_argument("shaper phase must be finite");
  entries_[bin] = Entry{phase, amplitude};
}

double ShaperMask::phase(int bin) const {
  auto it = entries_.find(bin);
  return it == entries_.end() ? 0.0 : it->second.phase;
}

double ShaperMask::amplitude(int bin) const {
  auto it = entries_.find(bin);
  return it == entries_.end() ? 1.0 : it->second.amplitude;
}

bool ShaperMask::phase_only() const {
  for (const auto& [bin, entry] : entries_) {
    if (entry.amplitude != 1.0) return false;
  }
  return true;
}

}  // namespace fbsa
