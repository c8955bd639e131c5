#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cranesite/metaheuristics.hpp"
#include "run_tracker.hpp"

namespace cranesite {

Population collision_velocities(const Population& sorted,
                                std::span<const double> sorted_masses,
                                double eps, CollisionRule rule) {
  const std::size_t n = sorted.size();
  if (n % 2 != 0)
    throw std::invalid_argument("collision needs an even population");
  const std::size_t half = n / 2;

  Population velocity(n, std::vector<double>(n ? sorted[0].size() : 0, 0.0));
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t j = i + half;
    const double m_stat = sorted_masses[i];
    const double m_move = sorted_masses[j];
    const double denom = m_stat + m_move;
    const double stat_factor = rule == CollisionRule::kOriginal
                                   ? (m_move + eps * m_move) / denom
                                   : (m_move - eps * m_move) / denom;
    const double move_factor = (m_move - eps * m_stat) / denom;
    for (std::size_t d = 0; d < sorted[i].size(); ++d) {
      // Stationary bodies are at rest; the mover approaches from its own side.
      const double v_move = sorted[j][d] - sorted[i][d];
      velocity[i][d] = stat_factor * v_move;
      velocity[j][d] = move_factor * v_move;
    }
  }
  return velocity;
}

namespace {

void clamp_to(std::vector<double>& x, const Bounds& bounds) {
  for (std::size_t d = 0; d < x.size(); ++d)
    x[d] = std::clamp(x[d], bounds.lower[d], bounds.upper[d]);
}

}  // namespace

Population cbo_step(const Population& population,
                    std::span<const double> fitness, int iter, int iter_max,
                    const Bounds& bounds, Rng& rng, CollisionRule rule) {
  const std::vector<std::size_t> order = rank_order(fitness);
  Population sorted;
  std::vector<double> sorted_fitness;
  sorted.reserve(order.size());
  sorted_fitness.reserve(order.size());
  for (std::size_t r : order) {
    sorted.push_back(population[r]);
    sorted_fitness.push_back(fitness[r]);
  }

  const std::vector<double> m = masses(sorted_fitness);
  const double eps = cor(iter, iter_max);
  const Population v = collision_velocities(sorted, m, eps, rule);

  const std::size_t half = sorted.size() / 2;
  Population next(sorted.size());
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t j = i + half;
    next[i] = sorted[i];
    for (std::size_t d = 0; d < next[i].size(); ++d)
      next[i][d] += rng.symmetric() * v[i][d];
    // The mover restarts from its stationary partner's old position.
    next[j] = sorted[i];
    for (std::size_t d = 0; d < next[j].size(); ++d)
      next[j][d] += rng.symmetric() * v[j][d];
    clamp_to(next[i], bounds);
    clamp_to(next[j], bounds);
  }
  return next;
}

std::size_t escape(Population& population, const Bounds& bounds, double pro,
                   Rng& rng) {
  std::size_t mutated = 0;
  for (auto& agent : population) {
    if (rng.uniform() < pro) {
      const std::size_t d = rng.below(agent.size());
      agent[d] = rng.uniform(bounds.lower[d], bounds.upper[d]);
      ++mutated;
    }
  }
  return mutated;
}

RunResult cbo_run(const Objective& objective, const Bounds& bounds,
                  const OptimizerConfig& config) {
  validate(bounds);
  validate(config);
  Rng rng(config.seed);
  detail::RunTracker tracker(objective, config);

  Population population = init_population(bounds, config.population, rng);
  std::vector<double> fitness = tracker.evaluate(population);
  for (int iter = 1; iter <= config.iterations; ++iter) {
    population = cbo_step(population, fitness, iter, config.iterations, bounds,
                          rng, config.collision);
    fitness = tracker.evaluate(population);
    tracker.close_iteration();
  }
  return std::move(tracker).finish();
}

namespace {

// Best-ever distinct solutions, best first.
class CollidingMemory {
 public:
  explicit CollidingMemory(std::size_t capacity) : capacity_(capacity) {}

  void offer(const Population& population, std::span<const double> fitness) {
    for (std::size_t a = 0; a < population.size(); ++a) {
      if (capacity_ == 0) return;
      const bool known = std::any_of(
          entries_.begin(), entries_.end(),
          [&](const Entry& e) { return e.x == population[a]; });
      if (known) continue;
      if (entries_.size() == capacity_ && !(fitness[a] < entries_.back().cost))
        continue;
      const auto pos = std::upper_bound(
          entries_.begin(), entries_.end(), fitness[a],
          [](double c, const Entry& e) { return c < e.cost; });
      entries_.insert(pos, Entry{population[a], fitness[a]});
      if (entries_.size() > capacity_) entries_.pop_back();
    }
  }

  // Overwrites the worst agents with the stored solutions.
  void inject(Population& population, std::vector<double>& fitness) const {
    const std::vector<std::size_t> order = rank_order(fitness);
    for (std::size_t e = 0; e < entries_.size() && e < order.size(); ++e) {
      const std::size_t worst = order[order.size() - 1 - e];
      population[worst] = entries_[e].x;
      fitness[worst] = entries_[e].cost;
    }
  }

 private:
  struct Entry {
    std::vector<double> x;
    double cost;
  };
  std::size_t capacity_;
  std::vector<Entry> entries_;
};

}  // namespace

RunResult ecbo_run(const Objective& objective, const Bounds& bounds,
                   const OptimizerConfig& config) {
  validate(bounds);
  validate(config);
  // Collision draws use the same stream as CBO; escape draws have their own,
  // so pro = 0 and an empty memory reproduce CBO exactly.
  Rng rng(config.seed);
  Rng escape_rng(Rng::derive(config.seed, 1));
  detail::RunTracker tracker(objective, config);
  CollidingMemory memory(static_cast<std::size_t>(config.effective_cm_size()));

  Population population = init_population(bounds, config.population, rng);
  std::vector<double> fitness = tracker.evaluate(population);
  memory.offer(population, fitness);
  for (int iter = 1; iter <= config.iterations; ++iter) {
    memory.inject(population, fitness);
    population = cbo_step(population, fitness, iter, config.iterations, bounds,
                          rng, config.collision);
    escape(population, bounds, config.pro, escape_rng);
    fitness = tracker.evaluate(population);
    memory.offer(population, fitness);
    tracker.close_iteration();
  }
  return std::move(tracker).finish();
}

}  // namespace cranesite
