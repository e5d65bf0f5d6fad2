#pragma once

#include "fbsa/encoding.hpp"
#include "fbsa/mode_transform.hpp"

namespace fbsa {

/// Interleaved-Hadamard Bell-analyzer target on bins (-1, 0, 1, 2), acting on
/// annihilation operators in ascending frequency order.
struct TargetUnitary {
  Encoding encoding = Encoding::kAdjacent;
  Matrix4c matrix = Matrix4c::Identity();
  BinAssignment bin_assignment = fbsa::bin_assignment(Encoding::kAdjacent);
};

/// interleaved: Hadamards on (-1,0) and (1,2); adjacent: on (-1,1) and (0,2).
TargetUnitary target_unitary(Encoding encoding);

/// Identity on the computational bins with the given assignment. Useful as a
/// sanity target for synthesis.
TargetUnitary identity_target(Encoding encoding = Encoding::kAdjacent);

}  // namespace fbsa
