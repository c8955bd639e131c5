#ifndef CRANESITE_SRC_RUN_TRACKER_HPP_
#define CRANESITE_SRC_RUN_TRACKER_HPP_

#include <cstddef>
#include <limits>
#include <vector>

#include "cranesite/metaheuristics.hpp"

namespace cranesite::detail {

// Evaluates agents and keeps the best point ever seen plus the per-iteration
// best-so-far history.
class RunTracker {
 public:
  RunTracker(const Objective& objective, const OptimizerConfig& config)
      : objective_(objective) {
    result_.seed = config.seed;
    result_.best_cost = std::numeric_limits<double>::infinity();
    result_.history.reserve(static_cast<std::size_t>(config.iterations));
  }

  std::vector<double> evaluate(const Population& population) {
    std::vector<double> fitness(population.size());
    for (std::size_t a = 0; a < population.size(); ++a) {
      fitness[a] = objective_(population[a]);
      ++result_.evaluations;
      if (fitness[a] < result_.best_cost) {
        result_.best_cost = fitness[a];
        result_.best_x = population[a];
      }
    }
    return fitness;
  }

  void close_iteration() { result_.history.push_back(result_.best_cost); }

  const std::vector<double>& best_x() const { return result_.best_x; }
  double best_cost() const { return result_.best_cost; }

  RunResult finish() && { return std::move(result_); }

 private:
  const Objective& objective_;
  RunResult result_;
};

}  // namespace cranesite::detail

#endif  // CRANESITE_SRC_RUN_TRACKER_HPP_
