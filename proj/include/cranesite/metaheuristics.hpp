#ifndef CRANESITE_METAHEURISTICS_HPP_
#define CRANESITE_METAHEURISTICS_HPP_

// Population optimizers over bounded continuous objectives:
//
//   CBO   colliding bodies optimization
//   ECBO  CBO with a colliding memory and a one-dimension escape move
//   VPS   vibrating particle system
//
// All three minimize. Runs are fully determined by (objective, bounds,
// config); every random draw comes from an Rng seeded with config.seed, in
// the order documented on each step function.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cranesite/problem.hpp"
#include "cranesite/rng.hpp"

namespace cranesite {

using Population = std::vector<std::vector<double>>;

// Post-collision velocity of the stationary body. kOriginal uses
// (m_moving + eps * m_moving); kAsPrinted uses (m_moving - eps * m_moving),
// which leaves the stationary half frozen at eps = 1.
enum class CollisionRule { kOriginal, kAsPrinted };

struct OptimizerConfig {
  int population = 20;
  int iterations = 200;
  std::uint64_t seed = 0;

  CollisionRule collision = CollisionRule::kOriginal;

  // ECBO
  double pro = 0.3;
  // Colliding-memory size; unset means max(1, population / 10).
  std::optional<int> cm_size;

  // VPS
  double w1 = 0.3;
  double w2 = 0.3;
  double w3 = 0.4;
  double p_bad = 0.3;
  double d_exponent = 0.05;
  double hmcr = 0.95;
  double par = 0.1;

  int effective_cm_size() const {
    return cm_size.value_or(population / 10 > 1 ? population / 10 : 1);
  }
};

// Throws std::invalid_argument naming the first violated constraint.
void validate(const OptimizerConfig& config);

struct RunResult {
  std::vector<double> best_x;
  double best_cost = 0.0;
  // Best-so-far cost after each iteration; empty when iterations == 0.
  std::vector<double> history;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

enum class Algorithm { kCbo, kEcbo, kVps };

std::string_view to_string(Algorithm algorithm);
// Accepts "cbo", "ecbo" and "vps".
Algorithm parse_algorithm(std::string_view name);

// Uniform sampling of n points in the box; per point, one draw per axis.
Population init_population(const Bounds& bounds, int n, Rng& rng);

// m_k = (1/fit_k) / sum_i (1/fit_i). When any fitness is <= 0 the values are
// shifted by (1 - min) first. Throws std::domain_error on non-finite input.
std::vector<double> masses(std::span<const double> fitnesses);

// Coefficient of restitution, 1 - iter / iter_max.
double cor(int iter, int iter_max);

// Stable ascending order of `fitness`; ties keep the lower index first.
std::vector<std::size_t> rank_order(std::span<const double> fitness);

// Post-collision velocities for a population already sorted ascending by
// cost. Rank i < n/2 is stationary and collides with rank i + n/2.
Population collision_velocities(const Population& sorted,
                                std::span<const double> sorted_masses,
                                double eps, CollisionRule rule);

// One CBO move. Returns the new positions in rank order of `fitness`.
// Draw order: for each pair i = 0..n/2-1, one [-1, 1) draw per axis for the
// stationary body, then one per axis for its moving partner. Results are
// clamped to the bounds.
Population cbo_step(const Population& population,
                    std::span<const double> fitness, int iter, int iter_max,
                    const Bounds& bounds, Rng& rng,
                    CollisionRule rule = CollisionRule::kOriginal);

// ECBO escape move: for each agent draw rn; if rn < pro, one uniformly chosen
// axis is redrawn uniformly in bounds (draws: rn, then axis, then value).
// Returns how many agents were mutated.
std::size_t escape(Population& population, const Bounds& bounds, double pro,
                   Rng& rng);

struct VpsWeights {
  double w1;
  double w2;
  double w3;
};

// Weights in effect for one particle given its switch draw: when
// p_bad < draw, the bad particle is ignored (w3 = 0, w2 = 1 - w1).
VpsWeights effective_weights(const OptimizerConfig& config, double draw);

// Damping factor (iter / iter_max)^(-d_exponent); iter starts at 1.
double vps_damping(int iter, int iter_max, double d_exponent);

// One VPS move. `memory` holds each particle's own best position and feeds
// the boundary repair. Particles keep their index; good/bad anchors are
// picked from the better/worse half of the stable ranking by `fitness`.
//
// Draw order per particle: good-anchor rank, bad-anchor rank, switch draw,
// then (rand1, rand2, rand3) per axis; afterwards, per violating axis in
// order: hmcr draw, then either (memory particle, par draw[, offset]) or a
// uniform value.
Population vps_step(const Population& population,
                    std::span<const double> fitness,
                    std::span<const double> hb, const Population& memory,
                    int iter, int iter_max, const Bounds& bounds,
                    const OptimizerConfig& config, Rng& rng);

RunResult cbo_run(const Objective& objective, const Bounds& bounds,
                  const OptimizerConfig& config);
RunResult ecbo_run(const Objective& objective, const Bounds& bounds,
                   const OptimizerConfig& config);
RunResult vps_run(const Objective& objective, const Bounds& bounds,
                  const OptimizerConfig& config);

RunResult run(Algorithm algorithm, const Objective& objective,
              const Bounds& bounds, const OptimizerConfig& config);

}  // namespace cranesite

#endif  // CRANESITE_METAHEURISTICS_HPP_
