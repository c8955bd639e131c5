#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cranesite/metaheuristics.hpp"
#include "run_tracker.hpp"

namespace cranesite {

VpsWeights effective_weights(const OptimizerConfig& config, double draw) {
  if (config.p_bad < draw) return {config.w1, 1.0 - config.w1, 0.0};
  return {config.w1, config.w2, config.w3};
}

double vps_damping(int iter, int iter_max, double d_exponent) {
  return std::pow(static_cast<double>(iter) / static_cast<double>(iter_max),
                  -d_exponent);
}

namespace {

// Neighborhood for the pitch adjustment, as a fraction of the axis range.
constexpr double kPitchFraction = 0.01;

// Harmony-search style repair of one out-of-bounds component.
double repair(std::size_t d, const Population& memory, const Bounds& bounds,
              const OptimizerConfig& config, Rng& rng) {
  const double lo = bounds.lower[d];
  const double hi = bounds.upper[d];
  if (rng.uniform() < config.hmcr) {
    double value = memory[rng.below(memory.size())][d];
    if (rng.uniform() < config.par)
      value += rng.symmetric() * kPitchFraction * (hi - lo);
    return std::clamp(value, lo, hi);
  }
  return rng.uniform(lo, hi);
}

}  // namespace

Population vps_step(const Population& population,
                    std::span<const double> fitness,
                    std::span<const double> hb, const Population& memory,
                    int iter, int iter_max, const Bounds& bounds,
                    const OptimizerConfig& config, Rng& rng) {
  const std::size_t n = population.size();
  if (n < 2) throw std::invalid_argument("vps_step needs at least 2 particles");
  const std::vector<std::size_t> order = rank_order(fitness);
  const std::size_t half = n / 2;
  const double damping = vps_damping(iter, iter_max, config.d_exponent);

  Population next(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto& x = population[p];
    const auto& good = population[order[rng.below(half)]];
    const auto& bad = population[order[half + rng.below(n - half)]];
    const VpsWeights w = effective_weights(config, rng.uniform());

    std::vector<double>& y = next[p];
    y.resize(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double amplitude = w.w1 * (hb[d] - x[d]) + w.w2 * (good[d] - x[d]) +
                               w.w3 * (bad[d] - x[d]);
      const double r1 = rng.uniform();
      const double r2 = rng.uniform();
      const double r3 = rng.uniform();
      y[d] = w.w1 * (damping * amplitude * r1 + hb[d]) +
             w.w2 * (damping * amplitude * r2 + good[d]) +
             w.w3 * (damping * amplitude * r3 + bad[d]);
    }
    for (std::size_t d = 0; d < y.size(); ++d) {
      if (y[d] < bounds.lower[d] || y[d] > bounds.upper[d])
        y[d] = repair(d, memory, bounds, config, rng);
    }
  }
  return next;
}

RunResult vps_run(const Objective& objective, const Bounds& bounds,
                  const OptimizerConfig& config) {
  validate(bounds);
  validate(config);
  Rng rng(config.seed);
  detail::RunTracker tracker(objective, config);

  Population population = init_population(bounds, config.population, rng);
  std::vector<double> fitness = tracker.evaluate(population);
  Population memory = population;
  std::vector<double> memory_cost = fitness;

  for (int iter = 1; iter <= config.iterations; ++iter) {
    population = vps_step(population, fitness, tracker.best_x(), memory, iter,
                          config.iterations, bounds, config, rng);
    fitness = tracker.evaluate(population);
    for (std::size_t p = 0; p < population.size(); ++p) {
      if (fitness[p] < memory_cost[p]) {
        memory[p] = population[p];
        memory_cost[p] = fitness[p];
      }
    }
    tracker.close_iteration();
  }
  return std::move(tracker).finish();
}

}  // namespace cranesite
