#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "fbsa/mode_transform.hpp"
#include "fbsa/targets.hpp"

namespace fbsa {

/// Unordered mode pair {j, k} with j <= k.
using ModePair = std::pair<int, int>;

/// Two-photon state over frequency bins: amplitude on |1_j 1_k> for j < k and
/// on |2_j> for j == k. Both are orthonormal Fock basis vectors, so the norm is
/// the plain sum of |c|^2.
class TwoPhotonState {
 public:
  using Map = std::map<ModePair, Complex>;

  TwoPhotonState() = default;

  static ModePair canonical(int j, int k) { return j <= k ? ModePair{j, k} : ModePair{k, j}; }

  void set(int j, int k, Complex amplitude) { amplitudes_[canonical(j, k)] = amplitude; }
  void add(int j, int k, Complex amplitude) { amplitudes_[canonical(j, k)] += amplitude; }
  Complex amplitude(int j, int k) const;

  const Map& amplitudes() const { return amplitudes_; }
  double norm_squared() const;
  Complex inner(const TwoPhotonState& other) const;  // <this|other>

  /// Largest and smallest mode index with a nonzero amplitude.
  std::pair<int, int> support() const;

 private:
  Map amplitudes_;
};

enum class BellKind { kPsiPlus, kPsiMinus, kPhiPlus, kPhiMinus };

std::string_view to_string(BellKind kind);
/// Accepts "psi+", "psi-", "phi+", "phi-" (any case) and the Greek forms.
BellKind parse_bell_kind(std::string_view text);

/// Psi(+/-) = (|A0 B1> +/- |A1 B0>)/sqrt2, Phi(+/-) = (|A0 B0> +/- |A1 B1>)/sqrt2
/// on the bins of target.bin_assignment.
TwoPhotonState bell_state(BellKind kind, const TargetUnitary& target);

/// Transforms each creation operator as a_j^dag -> sum_p W(p, j) a_p^dag,
/// the same column convention as classical_spectrum. The output lists every
/// pair of the window. Throws std::out_of_range if the input has support
/// outside the window.
TwoPhotonState propagate_two_photon(const ModeTransform& w, const TwoPhotonState& state);

/// Canonical two-photon basis of a window: all (j, k), j <= k, in
/// lexicographic order.
std::vector<ModePair> pair_basis(const FrequencyGrid& grid);

/// Independent reference for propagate_two_photon: applies the transformed
/// creation operators one photon at a time on explicit occupation-number
/// vectors, and returns the matrix on pair_basis(grid). Only for windows of
/// at most 12 bins (std::invalid_argument otherwise).
Eigen::MatrixXcd fock_oracle(const ModeTransform& w);

/// Coincidence channels between distinct computational bins.
enum class BinPair { kA0A1, kA0B0, kA0B1, kA1B0, kA1B1, kB0B1 };
inline constexpr std::array<BinPair, 6> kAllBinPairs{BinPair::kA0A1, BinPair::kA0B0,
                                                     BinPair::kA0B1, BinPair::kA1B0,
                                                     BinPair::kA1B1, BinPair::kB0B1};
std::string_view to_string(BinPair pair);
BinPair parse_bin_pair(std::string_view text);
/// Mode indices of the two bins in a channel under `assignment`.
ModePair modes_of(BinPair pair, const BinAssignment& assignment);

struct CoincidencePattern {
  std::array<double, 6> probs{};
  /// Probability of every other outcome: same-bin pairs, pairs that leave
  /// the computational bins, and loss from the window.
  double residual = 0.0;

  double operator[](BinPair pair) const { return probs[static_cast<std::size_t>(pair)]; }
  double total() const;
};

/// Requires w.computational_bins (std::invalid_argument otherwise).
CoincidencePattern coincidence_pattern(const ModeTransform& w, const TwoPhotonState& state);

/// Integer coincidence counts per channel.
using CoincidenceCounts = std::array<std::uint64_t, 6>;

struct AccuracyReport {
  std::string input_label;
  double n_correct = 0.0;
  double n_incorrect = 0.0;
  double accuracy = 0.0;
  double std_error = 0.0;

  bool operator==(const AccuracyReport&) const = default;
};

/// Channels that identify `kind`; only defined for Psi(+/-).
std::array<BinPair, 2> correct_pairs(BellKind kind);

/// N_C / (N_C + N_I) from probabilities (std_error 0). Throws
/// std::invalid_argument for Phi inputs and std::domain_error if N_C + N_I = 0.
AccuracyReport discrimination_accuracy(const CoincidencePattern& pattern, BellKind input);
/// Same from counts, with binomial std_error sqrt(a (1 - a) / (N_C + N_I)).
AccuracyReport discrimination_accuracy(const CoincidenceCounts& counts, BellKind input);

/// Independent Poisson draws with mean total_pairs * prob per channel.
CoincidenceCounts poisson_sample_counts(const CoincidencePattern& pattern, double total_pairs,
                                        std::uint64_t seed);

/// Embeds a 4x4 target on the computational bins of `grid`, identity elsewhere.
ModeTransform embed_target(const TargetUnitary& target, const FrequencyGrid& grid);

}  // namespace fbsa
