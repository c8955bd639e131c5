#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cranesite/metaheuristics.hpp"

namespace cranesite {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void validate(const OptimizerConfig& config) {
  require(config.population >= 4 && config.population % 2 == 0,
          "population must be even and at least 4");
  require(config.iterations >= 0, "iterations must be non-negative");
  require(probability(config.pro), "pro must lie in [0, 1]");
  const int cm = config.effective_cm_size();
  require(cm >= 0 && cm <= config.population / 2,
          "cm_size must lie in [0, population / 2]");
  require(config.w1 >= 0.0 && config.w2 >= 0.0 && config.w3 >= 0.0,
          "VPS weights must be non-negative");
  require(std::abs(config.w1 + config.w2 + config.w3 - 1.0) <= 1e-9,
          "VPS weights must sum to 1");
  require(probability(config.p_bad), "p_bad must lie in [0, 1]");
  require(std::isfinite(config.d_exponent) && config.d_exponent > 0.0,
          "d_exponent must be positive");
  require(probability(config.hmcr), "hmcr must lie in [0, 1]");
  require(probability(config.par), "par must lie in [0, 1]");
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCbo:
      return "cbo";
    case Algorithm::kEcbo:
      return "ecbo";
    case Algorithm::kVps:
      return "vps";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "cbo") return Algorithm::kCbo;
  if (name == "ecbo") return Algorithm::kEcbo;
  if (name == "vps") return Algorithm::kVps;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected cbo, ecbo or vps)");
}

Population init_population(const Bounds& bounds, int n, Rng& rng) {
  Population population(static_cast<std::size_t>(n),
                        std::vector<double>(bounds.dimension()));
  for (auto& agent : population) {
    for (std::size_t d = 0; d < agent.size(); ++d)
      agent[d] = rng.uniform(bounds.lower[d], bounds.upper[d]);
  }
  return population;
}

std::vector<double> masses(std::span<const double> fitnesses) {
  if (fitnesses.empty()) return {};
  for (double f : fitnesses) {
    if (!std::isfinite(f))
      throw std::domain_error("masses: objective returned a non-finite value");
  }
  const double lowest = *std::min_element(fitnesses.begin(), fitnesses.end());
  const double shift = lowest <= 0.0 ? 1.0 - lowest : 0.0;

  std::vector<double> m(fitnesses.size());
  double total = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double f = fitnesses[k] + shift;
    if (!(f > 0.0))
      throw std::domain_error("masses: fitness must be positive after shift");
    m[k] = 1.0 / f;
    total += m[k];
  }
  for (double& v : m) v /= total;
  return m;
}

double cor(int iter, int iter_max) {
  return 1.0 - static_cast<double>(iter) / static_cast<double>(iter_max);
}

std::vector<std::size_t> rank_order(std::span<const double> fitness) {
  std::vector<std::size_t> order(fitness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fitness[a] < fitness[b];
  });
  return order;
}

RunResult run(Algorithm algorithm, const Objective& objective,
              const Bounds& bounds, const OptimizerConfig& config) {
  switch (algorithm) {
    case Algorithm::kCbo:
      return cbo_run(objective, bounds, config);
    case Algorithm::kEcbo:
      return ecbo_run(objective, bounds, config);
    case Algorithm::kVps:
      return vps_run(objective, bounds, config);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace cranesite
