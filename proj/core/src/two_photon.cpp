#include "fbsa/two_photon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace fbsa {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Complex TwoPhotonState::amplitude(int j, int k) const {
  auto it = amplitudes_.find(canonical(j, k));
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double TwoPhotonState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [pair, c] : amplitudes_) sum += std::norm(c);
  return sum;
}

Complex TwoPhotonState::inner(const TwoPhotonState& other) const {
  Complex sum{};
  for (const auto& [pair, c] : amplitudes_) {
    sum += std::conj(c) * other.amplitude(pair.first, pair.second);
  }
  return sum;
}

std::pair<int, int> TwoPhotonState::support() const {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& [pair, c] : amplitudes_) {
    if (c == Complex{}) continue;
    if (!any) {
      lo = pair.first;
      hi = pair.second;
      any = true;
    }
    lo = std::min(lo, pair.first);
    hi = std::max(hi, pair.second);
  }
  return {lo, hi};
}

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::kPsiPlus: return "psi+";
    case BellKind::kPsiMinus: return "psi-";
    case BellKind::kPhiPlus: return "phi+";
    case BellKind::kPhiMinus: return "phi-";
  }
  return "?";
}

BellKind parse_bell_kind(std::string_view text) {
  const std::string t = lower(text);
  if (t == "psi+" || t == "\xce\xa8+" || t == "\xcf\x88+") return BellKind::kPsiPlus;
  if (t == "psi-" || t == "\xce\xa8-" || t == "\xcf\x88-") return BellKind::kPsiMinus;
  if (t == "phi+" || t == "\xce\xa6+" || t == "\xcf\x86+") return BellKind::kPhiPlus;
  if (t == "phi-" || t == "\xce\xa6-" || t == "\xcf\x86-") return BellKind::kPhiMinus;
  throw std::invalid_argument("unknown Bell state '" + std::string(text) +
                              "' (expected psi+|psi-|phi+|phi-)");
}

TwoPhotonState bell_state(BellKind kind, const TargetUnitary& target) {
  const auto& a = target.bin_assignment;
  const int a0 = bin_of(a, LogicalBin::kA0), a1 = bin_of(a, LogicalBin::kA1);
  const int b0 = bin_of(a, LogicalBin::kB0), b1 = bin_of(a, LogicalBin::kB1);
  TwoPhotonState state;
  switch (kind) {
    case BellKind::kPsiPlus:
    case BellKind::kPsiMinus:
      state.set(a0, b1, kInvSqrt2);
      state.set(a1, b0, kind == BellKind::kPsiPlus ? kInvSqrt2 : -kInvSqrt2);
      break;
    case BellKind::kPhiPlus:
    case BellKind::kPhiMinus:
      state.set(a0, b0, kInvSqrt2);
      state.set(a1, b1, kind == BellKind::kPhiPlus ? kInvSqrt2 : -kInvSqrt2);
      break;
  }
  return state;
}

TwoPhotonState propagate_two_photon(const ModeTransform& w, const TwoPhotonState& state) {
  const FrequencyGrid& grid = w.grid;
  for (const auto& [pair, c] : state.amplitudes()) {
    if (!grid.contains(pair.first) || !grid.contains(pair.second)) {
      throw std::out_of_range("two-photon state has support outside the transform window");
    }
  }

  // A_pq = lambda_pq * sum_{j<=k} kappa_jk c_jk (T_pj T_qk + T_pk T_qj), with
  // kappa and lambda equal to 1/sqrt2 on same-bin pairs and 1 otherwise.
  const auto n = static_cast<Eigen::Index>(grid.dimension());
  TwoPhotonState out;
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p; q < n; ++q) {
      Complex sum{};
      for (const auto& [pair, c] : state.amplitudes()) {
        if (c == Complex{}) continue;
        const auto j = static_cast<Eigen::Index>(grid.index_of(pair.first));
        const auto k = static_cast<Eigen::Index>(grid.index_of(pair.second));
        const double kappa = j == k ? kInvSqrt2 : 1.0;
        sum += kappa * c *
               (w.matrix(p, j) * w.matrix(q, k) + w.matrix(p, k) * w.matrix(q, j));
      }
      if (p == q) sum *= kInvSqrt2;
      out.set(grid.window_lo + static_cast<int>(p), grid.window_lo + static_cast<int>(q), sum);
    }
  }
  return out;
}

std::vector<ModePair> pair_basis(const FrequencyGrid& grid) {
  std::vector<ModePair> basis;
  for (int j = grid.window_lo; j <= grid.window_hi; ++j) {
    for (int k = j; k <= grid.window_hi; ++k) basis.emplace_back(j, k);
  }
  return basis;
}

Eigen::MatrixXcd fock_oracle(const ModeTransform& w) {
  const std::size_t modes = w.grid.dimension();
  if (modes > 12) throw std::invalid_argument("fock_oracle supports windows of at most 12 bins");
  using Occupation = std::vector<int>;
  using FockState = std::map<Occupation, Complex>;

  // a_p^dag |.. n_p ..> = sqrt(n_p + 1) |.. n_p + 1 ..>
  auto create = [&](const FockState& in, std::size_t mode_in) {
    FockState out;
    for (const auto& [occ, amp] : in) {
      for (std::size_t p = 0; p < modes; ++p) {
        const Complex t = w.matrix(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(mode_in));
        if (t == Complex{}) continue;
        Occupation next = occ;
        next[p] += 1;
        out[next] += amp * t * std::sqrt(static_cast<double>(next[p]));
      }
    }
    return out;
  };

  const std::vector<ModePair> basis = pair_basis(w.grid);
  auto occupation_of = [&](const ModePair& pair) {
    Occupation occ(modes, 0);
    occ[w.grid.index_of(pair.first)] += 1;
    occ[w.grid.index_of(pair.second)] += 1;
    return occ;
  };

  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const FockState vacuum{{Occupation(modes, 0), Complex{1.0, 0.0}}};
  for (Eigen::Index col = 0; col < dim; ++col) {
    const ModePair& in = basis[static_cast<std::size_t>(col)];
    FockState state = create(create(vacuum, w.grid.index_of(in.second)), w.grid.index_of(in.first));
    // (a^dag)^2 |0> = sqrt2 |2>, so the normalized |2_j> needs 1/sqrt2.
    const double norm = in.first == in.second ? kInvSqrt2 : 1.0;
    for (Eigen::Index row = 0; row < dim; ++row) {
      auto it = state.find(occupation_of(basis[static_cast<std::size_t>(row)]));
      if (it != state.end()) out(row, col) = norm * it->second;
    }
  }
  return out;
}

std::string_view to_string(BinPair pair) {
  switch (pair) {
    case BinPair::kA0A1: return "A0A1";
    case BinPair::kA0B0: return "A0B0";
    case BinPair::kA0B1: return "A0B1";
    case BinPair::kA1B0: return "A1B0";
    case BinPair::kA1B1: return "A1B1";
    case BinPair::kB0B1: return "B0B1";
  }
  return "?";
}

BinPair parse_bin_pair(std::string_view text) {
  for (BinPair pair : kAllBinPairs) {
    if (to_string(pair) == text) return pair;
  }
  throw std::invalid_argument("unknown coincidence channel '" + std::string(text) + "'");
}

ModePair modes_of(BinPair pair, const BinAssignment& a) {
  const int a0 = bin_of(a, LogicalBin::kA0), a1 = bin_of(a, LogicalBin::kA1);
  const int b0 = bin_of(a, LogicalBin::kB0), b1 = bin_of(a, LogicalBin::kB1);
  switch (pair) {
    case BinPair::kA0A1: return TwoPhotonState::canonical(a0, a1);
    case BinPair::kA0B0: return TwoPhotonState::canonical(a0, b0);
    case BinPair::kA0B1: return TwoPhotonState::canonical(a0, b1);
    case BinPair::kA1B0: return TwoPhotonState::canonical(a1, b0);
    case BinPair::kA1B1: return TwoPhotonState::canonical(a1, b1);
    case BinPair::kB0B1: return TwoPhotonState::canonical(b0, b1);
  }
  return {};
}

double CoincidencePattern::total() const {
  double sum = 0.0;
  for (double p : probs) sum += p;
  return sum;
}

CoincidencePattern coincidence_pattern(const ModeTransform& w, const TwoPhotonState& state) {
  if (!w.computational_bins) {
    throw std::invalid_argument("coincidence_pattern needs a transform with computational bins");
  }
  const TwoPhotonState out = propagate_two_photon(w, state);
  CoincidencePattern pattern;
  for (BinPair pair : kAllBinPairs) {
    const ModePair modes = modes_of(pair, *w.computational_bins);
    pattern.probs[static_cast<std::size_t>(pair)] = std::norm(out.amplitude(modes.first, modes.second));
  }
  pattern.residual = std::max(0.0, state.norm_squared() - pattern.total());
  return pattern;
}

std::array<BinPair, 2> correct_pairs(BellKind kind) {
  switch (kind) {
    case BellKind::kPsiPlus: return {BinPair::kA0A1, BinPair::kB0B1};
    case BellKind::kPsiMinus: return {BinPair::kA0B1, BinPair::kA1B0};
    default:
      throw std::invalid_argument("Phi states cannot be discriminated by this analyzer");
  }
}

namespace {

AccuracyReport accuracy_from(double n_correct, double n_incorrect, BellKind input,
                             bool counts) {
  if (!(n_correct + n_incorrect > 0.0)) {
    throw std::domain_error("no correct or incorrect events; accuracy undefined");
  }
  AccuracyReport report;
  report.input_label = std::string(to_string(input));
  report.n_correct = n_correct;
  report.n_incorrect = n_incorrect;
  report.accuracy = n_correct / (n_correct + n_incorrect);
  report.std_error =
      counts ? std::sqrt(report.accuracy * (1.0 - report.accuracy) / (n_correct + n_incorrect))
             : 0.0;
  return report;
}

BellKind partner(BellKind kind) {
  return kind == BellKind::kPsiPlus ? BellKind::kPsiMinus : BellKind::kPsiPlus;
}

}  // namespace

AccuracyReport discrimination_accuracy(const CoincidencePattern& pattern, BellKind input) {
  double nc = 0.0, ni = 0.0;
  for (BinPair p : correct_pairs(input)) nc += pattern[p];
  for (BinPair p : correct_pairs(partner(input))) ni += pattern[p];
  return accuracy_from(nc, ni, input, false);
}

AccuracyReport discrimination_accuracy(const CoincidenceCounts& counts, BellKind input) {
  double nc = 0.0, ni = 0.0;
  for (BinPair p : correct_pairs(input)) nc += static_cast<double>(counts[static_cast<std::size_t>(p)]);
  for (BinPair p : correct_pairs(partner(input))) {
    ni += static_cast<double>(counts[static_cast<std::size_t>(p)]);
  }
  return accuracy_from(nc, ni, input, true);
}

CoincidenceCounts poisson_sample_counts(const CoincidencePattern& pattern, double total_pairs,
                                        std::uint64_t seed) {
  if (!(total_pairs > 0.0)) throw std::invalid_argument("total_pairs must be positive");
  std::mt19937_64 rng(seed);
  CoincidenceCounts counts{};
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double mean = total_pairs * pattern.probs[i];
    if (!(mean > 0.0)) continue;
    std::poisson_distribution<std::uint64_t> draw(mean);
    counts[i] = draw(rng);
  }
  return counts;
}

ModeTransform embed_target(const TargetUnitary& target, const FrequencyGrid& grid) {
  ModeTransform out = ModeTransform::identity(grid);
  const auto base = static_cast<Eigen::Index>(grid.index_of(FrequencyGrid::kComputationalLo));
  out.matrix.block(base, base, 4, 4) = target.matrix;
  out.computational_bins = target.bin_assignment;
  return out;
}

}  // namespace fbsa
