#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fbsa {

/// Global-best particle swarm with constriction-style coefficients.
struct PsoParams {
  int swarm_size = 50;
  int iterations = 600;
  double inertia = 0.729;
  double cognitive = 1.494;
  double social = 1.494;
  int restarts = 5;
  std::uint64_t seed = 1;
  /// Worker threads for cost evaluation. Results do not depend on this.
  int threads = 1;

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;
};

/// Axis-aligned search box.
struct SearchBox {
  std::vector<double> lower;
  std::vector<double> upper;
  /// Dimensions that wrap around [lower, upper) instead of clipping (angles).
  /// Empty means none.
  std::vector<bool> periodic;

  std::size_t dimension() const { return lower.size(); }
  bool is_periodic(std::size_t d) const { return d < periodic.size() && periodic[d]; }
  /// Clips non-periodic components and wraps periodic ones into range.
  void clip(std::span<double> x) const;
};

struct SwarmRun {
  std::vector<double> best_position;
  double best_cost = 0.0;
  /// Global-best cost after initialization and after each iteration.
  std::vector<double> trace;
  /// Final personal best of every particle.
  std::vector<std::vector<double>> personal_best;
};

using Objective = std::function<double(std::span<const double>)>;

/// One swarm. Each particle draws from its own generator seeded by
/// (run_seed, particle index, stage), so the outcome is independent of how
/// evaluations are scheduled across threads. The objective must be safe to
/// call concurrently when params.threads > 1.
///
/// With `start` non-empty, particle i starts at start[i % start.size()]
/// instead of a uniform draw; velocities are still random.
SwarmRun run_swarm(const Objective& objective, const SearchBox& box, const PsoParams& params,
                   std::uint64_t run_seed, std::span<const std::vector<double>> start = {},
                   std::uint32_t stage = 0);

}  // namespace fbsa
