#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "fbsa/encoding.hpp"
#include "fbsa/frequency_grid.hpp"

namespace fbsa {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;

/// Linear map on the bin window: matrix(out, in) is the amplitude carried
/// from input bin `in` to output bin `out`, both as window positions.
struct ModeTransform {
  FrequencyGrid grid;
  Eigen::MatrixXcd matrix;
  /// (A0, A1, B0, B1) when the transform is attached to an encoding.
  std::optional<BinAssignment> computational_bins;

  static ModeTransform identity(const FrequencyGrid& grid);

  /// Element by mode index rather than window position.
  Complex at(int out_bin, int in_bin) const {
    return matrix(static_cast<Eigen::Index>(grid.index_of(out_bin)),
                  static_cast<Eigen::Index>(grid.index_of(in_bin)));
  }

  /// 4x4 block on the computational bins in ascending frequency order
  /// (-1, 0, 1, 2), the ordering the target unitaries use.
  Matrix4c computational_submatrix() const;

  /// Euclidean norm of the column for input bin `in_bin`.
  double column_norm(int in_bin) const;
};

}  // namespace fbsa
