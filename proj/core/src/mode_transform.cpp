#include "fbsa/mode_transform.hpp"

namespace fbsa {

ModeTransform ModeTransform::identity(const FrequencyGrid& grid) {
  grid.validate();
  const auto n = static_cast<Eigen::Index>(grid.dimension());
  return ModeTransform{grid, Eigen::MatrixXcd::Identity(n, n), std::nullopt};
}

Matrix4c ModeTransform::computational_submatrix() const {
  Matrix4c out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out(r, c) = at(FrequencyGrid::kComputationalLo + r, FrequencyGrid::kComputationalLo + c);
    }
  }
  return out;
}

double ModeTransform::column_norm(int in_bin) const {
  return matrix.col(static_cast<Eigen::Index>(grid.index_of(in_bin))).norm();
}

}  // namespace fbsa
