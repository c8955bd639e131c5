#include "cranesite/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cranesite {

namespace {

// Per-demand cost table cost[k][i][j] plus the demand mask, built once.
struct CostTable {
  CostTable(const TravelTimeMatrix& tm, const SiteInstance& instance)
      : supplies(tm.supplies()),
        demands(tm.demands()),
        active(tm.demands()),
        cost(tm.cranes() * tm.supplies() * tm.demands()) {
    for (std::size_t j = 0; j < demands; ++j) active[j] = instance.has_demand(j);
    for (std::size_t k = 0; k < tm.cranes(); ++k)
      for (std::size_t i = 0; i < supplies; ++i)
        for (std::size_t j = 0; j < demands; ++j)
          cost[(k * supplies + i) * demands + j] =
              demand_cost(tm, instance, k, i, j);
  }

  double at(std::size_t k, std::size_t i, std::size_t j) const {
    return cost[(k * supplies + i) * demands + j];
  }

  std::size_t supplies;
  std::size_t demands;
  std::vector<bool> active;
  std::vector<double> cost;
};

// Visits every ordered selection of `length` distinct values from [0, pool).
template <typename Visit>
void for_each_arrangement(std::size_t pool, std::size_t length,
                          std::vector<int>& current, std::vector<bool>& used,
                          Visit&& visit) {
  if (current.size() == length) {
    visit(current);
    return;
  }
  for (std::size_t v = 0; v < pool; ++v) {
    if (used[v]) continue;
    used[v] = true;
    current.push_back(static_cast<int>(v));
    for_each_arrangement(pool, length, current, used, visit);
    current.pop_back();
    used[v] = false;
  }
}

std::vector<int> to_labels(const std::vector<int>& zero_based) {
  std::vector<int> out(zero_based.size());
  std::transform(zero_based.begin(), zero_based.end(), out.begin(),
                 [](int v) { return v + 1; });
  return out;
}

}  // namespace

OracleResult oracle_homogeneous(const TravelTimeMatrix& tm,
                                const SiteInstance& instance) {
  const std::size_t materials = instance.material_count();
  if (materials > tm.supplies())
    throw std::invalid_argument(
        "homogeneous scenario needs at least as many supply points as materials");

  OracleResult result;
  result.best_cost = std::numeric_limits<double>::infinity();
  HomogeneousSolution candidate;
  for (std::size_t k = 0; k < tm.cranes(); ++k) {
    candidate.crane = static_cast<int>(k) + 1;
    std::vector<int> current;
    std::vector<bool> used(tm.supplies(), false);
    for_each_arrangement(tm.supplies(), materials, current, used,
                         [&](const std::vector<int>& tuple) {
                           candidate.supply_for_material = to_labels(tuple);
                           const double c = evaluate_homogeneous(candidate, tm, instance);
                           ++result.enumerated;
                           if (c < result.best_cost) {
                             result.best_cost = c;
                             result.best_solution = candidate;
                           }
                         });
  }
  return result;
}

OracleResult oracle_unbounded(const TravelTimeMatrix& tm,
                              const SiteInstance& instance) {
  const CostTable table(tm, instance);
  OracleResult result;
  result.best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < tm.cranes(); ++k) {
    AssignmentSolution sol{static_cast<int>(k) + 1,
                           std::vector<int>(tm.demands(), 1)};
    double total = 0.0;
    for (std::size_t j = 0; j < tm.demands(); ++j) {
      std::size_t best_i = 0;
      for (std::size_t i = 0; i < tm.supplies(); ++i) {
        ++result.enumerated;
        if (table.at(k, i, j) < table.at(k, best_i, j)) best_i = i;
      }
      sol.supply_for_demand[j] = static_cast<int>(best_i) + 1;
      if (table.active[j]) total += table.at(k, best_i, j);
    }
    if (total < result.best_cost) {
      result.best_cost = total;
      result.best_solution = std::move(sol);
    }
  }
  return result;
}

OracleResult oracle_sized(const TravelTimeMatrix& tm,
                          const SiteInstance& instance) {
  if (tm.supplies() != tm.demands())
    throw std::invalid_argument(
        "sized scenario requires as many supply points as demand points");
  const CostTable table(tm, instance);
  const std::size_t n = tm.demands();

  OracleResult result;
  result.best_cost = std::numeric_limits<double>::infinity();
  std::vector<int> perm(n);
  for (std::size_t k = 0; k < tm.cranes(); ++k) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double total = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (table.active[j])
          total += table.at(k, static_cast<std::size_t>(perm[j]), j);
      }
      ++result.enumerated;
      if (total < result.best_cost) {
        result.best_cost = total;
        result.best_solution =
            AssignmentSolution{static_cast<int>(k) + 1, to_labels(perm)};
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return result;
}

OracleResult run_oracle(ScenarioKind kind, const TravelTimeMatrix& tm,
                        const SiteInstance& instance) {
  switch (kind) {
    case ScenarioKind::Homogeneous:
      return oracle_homogeneous(tm, instance);
    case ScenarioKind::NonHomogeneousUnbounded:
      return oracle_unbounded(tm, instance);
    case ScenarioKind::NonHomogeneousSized:
      return oracle_sized(tm, instance);
  }
  throw std::invalid_argument("unknown scenario");
}

}  // namespace cranesite
