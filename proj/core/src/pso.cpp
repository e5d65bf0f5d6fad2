#include "fbsa/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace fbsa {
namespace {

/// 53-bit uniform double in [0, 1); avoids the implementation-defined
/// std::uniform_real_distribution so streams are reproducible across toolchains.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::mt19937_64 particle_stream(std::uint64_t run_seed, std::size_t particle, std::uint32_t stage) {
  std::seed_seq seq{static_cast<std::uint32_t>(run_seed), static_cast<std::uint32_t>(run_seed >> 32),
                    static_cast<std::uint32_t>(particle), stage, 0x9e3779b9u};
  return std::mt19937_64(seq);
}

double safe_cost(const Objective& objective, std::span<const double> x) {
  const double c = objective(x);
  return std::isnan(c) ? std::numeric_limits<double>::infinity() : c;
}

void evaluate_all(const Objective& objective, const std::vector<std::vector<double>>& positions,
                  std::vector<double>& costs, int threads) {
  const std::size_t n = positions.size();
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) costs[i] = safe_cost(objective, positions[i]);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) costs[i] = safe_cost(objective, positions[i]);
    });
  }
}

}  // namespace

void PsoParams::validate() const {
  if (swarm_size < 2) throw std::invalid_argument("swarm_size must be >= 2");
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  if (!(inertia > 0.0 && inertia < 1.0)) throw std::invalid_argument("inertia must lie in (0, 1)");
  if (!(cognitive > 0.0)) throw std::invalid_argument("cognitive coefficient must be > 0");
  if (!(social > 0.0)) throw std::invalid_argument("social coefficient must be > 0");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

void SearchBox::clip(std::span<double> x) const {
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (is_periodic(d)) {
      const double width = upper[d] - lower[d];
      double w = std::fmod(x[d] - lower[d], width);
      if (w < 0.0) w += width;
      x[d] = lower[d] + (w >= width ? 0.0 : w);
    } else {
      x[d] = std::clamp(x[d], lower[d], upper[d]);
    }
  }
}

SwarmRun run_swarm(const Objective& objective, const SearchBox& box, const PsoParams& params,
                   std::uint64_t run_seed, std::span<const std::vector<double>> start,
                   std::uint32_t stage) {
  params.validate();
  const std::size_t dim = box.dimension();
  if (box.upper.size() != dim) throw std::invalid_argument("search box bounds differ in size");
  for (std::size_t d = 0; d < dim; ++d) {
    if (!(box.upper[d] >= box.lower[d])) throw std::invalid_argument("search box is empty");
  }
  const auto n = static_cast<std::size_t>(params.swarm_size);

  std::vector<double> vmax(dim);
  for (std::size_t d = 0; d < dim; ++d) vmax[d] = 0.5 * (box.upper[d] - box.lower[d]);

  std::vector<std::mt19937_64> streams;
  streams.reserve(n);
  std::vector<std::vector<double>> pos(n, std::vector<double>(dim));
  std::vector<std::vector<double>> vel(n, std::vector<double>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    streams.push_back(particle_stream(run_seed, i, stage));
    auto& rng = streams.back();
    for (std::size_t d = 0; d < dim; ++d) {
      pos[i][d] = box.lower[d] + unit(rng) * (box.upper[d] - box.lower[d]);
      vel[i][d] = (2.0 * unit(rng) - 1.0) * vmax[d];
    }
    if (!start.empty()) {
      const auto& s = start[i % start.size()];
      if (s.size() != dim) throw std::invalid_argument("start position has the wrong dimension");
      pos[i] = s;
      box.clip(pos[i]);
    }
  }

  std::vector<double> costs(n);
  evaluate_all(objective, pos, costs, params.threads);

  std::vector<std::vector<double>> personal = pos;
  std::vector<double> personal_cost = costs;
  std::size_t leader = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (personal_cost[i] < personal_cost[leader]) leader = i;
  }
  SwarmRun run;
  run.best_position = personal[leader];
  run.best_cost = personal_cost[leader];
  run.trace.reserve(static_cast<std::size_t>(params.iterations) + 1);
  run.trace.push_back(run.best_cost);

  for (int it = 0; it < params.iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& rng = streams[i];
      for (std::size_t d = 0; d < dim; ++d) {
        const double r1 = unit(rng);
        const double r2 = unit(rng);
        double to_personal = personal[i][d] - pos[i][d];
        double to_best = run.best_position[d] - pos[i][d];
        if (box.is_periodic(d)) {
          const double period = box.upper[d] - box.lower[d];
          to_personal = std::remainder(to_personal, period);
          to_best = std::remainder(to_best, period);
        }
        double v = params.inertia * vel[i][d] + params.cognitive * r1 * to_personal +
                   params.social * r2 * to_best;
        v = std::clamp(v, -vmax[d], vmax[d]);
        double x = pos[i][d] + v;
        if (!box.is_periodic(d) && (x < box.lower[d] || x > box.upper[d])) {
          x = std::clamp(x, box.lower[d], box.upper[d]);
          v = 0.0;
        }
        vel[i][d] = v;
        pos[i][d] = x;
      }
      box.clip(pos[i]);
    }

    evaluate_all(objective, pos, costs, params.threads);

    // Sequential reduction in particle order; strict improvement only.
    for (std::size_t i = 0; i < n; ++i) {
      if (costs[i] < personal_cost[i]) {
        personal_cost[i] = costs[i];
        personal[i] = pos[i];
      }
      if (personal_cost[i] < run.best_cost) {
        run.best_cost = personal_cost[i];
        run.best_position = personal[i];
      }
    }
    run.trace.push_back(run.best_cost);
  }
  run.personal_best = std::move(personal);
  return run;
}

}  // namespace fbsa
