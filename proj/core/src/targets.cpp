#include "fbsa/targets.hpp"

#include <cmath>

namespace fbsa {

TargetUnitary target_unitary(Encoding encoding) {
  const double h = 1.0 / std::sqrt(2.0);
  Matrix4c u;
  if (encoding == Encoding::kInterleaved) {
    u << h, h, 0, 0,
         h, -h, 0, 0,
         0, 0, h, h,
         0, 0, h, -h;
  } else {
    u << h, 0, h, 0,
         0, h, 0, h,
         h, 0, -h, 0,
         0, h, 0, -h;
  }
  return TargetUnitary{encoding, u, bin_assignment(encoding)};
}

TargetUnitary identity_target(Encoding encoding) {
  return TargetUnitary{encoding, Matrix4c::Identity(), bin_assignment(encoding)};
}

}  // namespace fbsa
