#pragma once

#include <array>
#include <string>
#include <string_view>

namespace fbsa {

/// Placement of two frequency-bin qubits A and B on the bins {-1, 0, 1, 2}.
enum class Encoding { kInterleaved, kAdjacent };

/// Mode indices in the order (A0, A1, B0, B1).
using BinAssignment = std::array<int, 4>;

enum class LogicalBin { kA0 = 0, kA1 = 1, kB0 = 2, kB1 = 3 };

/// interleaved: (A0,A1)=(-1,1), (B0,B1)=(0,2)
/// adjacent:    (A0,A1)=(-1,0), (B0,B1)=(1,2)
constexpr BinAssignment bin_assignment(Encoding encoding) {
  return encoding == Encoding::kInterleaved ? BinAssignment{-1, 1, 0, 2}
                                            : BinAssignment{-1, 0, 1, 2};
}

constexpr int bin_of(const BinAssignment& assignment, LogicalBin which) {
  return assignment[static_cast<std::size_t>(which)];
}

std::string_view to_string(Encoding encoding);
/// Accepts "interleaved" or "adjacent"; throws std::invalid_argument otherwise.
Encoding parse_encoding(std::string_view text);

}  // namespace fbsa
