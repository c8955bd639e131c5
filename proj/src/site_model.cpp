#include "cranesite/site_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cranesite {

namespace {

bool finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

void check_points(const std::vector<Point3>& points, const char* name) {
  if (points.empty())
    throw std::invalid_argument(std::string(name) + " must not be empty");
  for (const Point3& p : points) {
    if (!finite(p))
      throw std::invalid_argument(std::string(name) +
                                  " coordinates must be finite");
  }
}

}  // namespace

bool SiteInstance::has_demand(std::size_t j) const {
  double total = 0.0;
  for (const auto& row : demand_quantities) total += row[j];
  return total > 0.0;
}

void validate(const SiteInstance& instance) {
  check_points(instance.demand_points, "demand_points");
  check_points(instance.supply_points, "supply_points");
  check_points(instance.crane_positions, "crane_positions");
  if (instance.gamma.size() != instance.crane_count())
    throw std::invalid_argument(
        "gamma length must equal crane position count");
  for (double g : instance.gamma) {
    if (!(std::isfinite(g) && g > 0.0))
      throw std::invalid_argument("gamma entries must be positive");
  }
  if (instance.demand_quantities.empty())
    throw std::invalid_argument(
        "demand_quantities must have at least one material row");
  for (const auto& row : instance.demand_quantities) {
    if (row.size() != instance.demand_count())
      throw std::invalid_argument(
          "demand_quantities row length must equal demand point count");
    for (double q : row) {
      if (!(std::isfinite(q) && q >= 0.0))
        throw std::invalid_argument(
            "demand_quantities entries must be non-negative");
    }
  }
  validate(instance.crane);
}

TravelTimeMatrix::TravelTimeMatrix(std::size_t cranes, std::size_t supplies,
                                   std::size_t demands)
    : cranes_(cranes),
      supplies_(supplies),
      demands_(demands),
      t_(cranes * supplies * demands, 0.0) {}

TravelTimeMatrix build_time_matrix(const SiteInstance& instance) {
  TravelTimeMatrix tm(instance.crane_count(), instance.supply_count(),
                      instance.demand_count());
  for (std::size_t k = 0; k < tm.cranes(); ++k) {
    for (std::size_t i = 0; i < tm.supplies(); ++i) {
      for (std::size_t j = 0; j < tm.demands(); ++j) {
        tm.at(k, i, j) = travel_time(instance.supply_points[i],
                                     instance.demand_points[j],
                                     instance.crane_positions[k],
                                     instance.crane, instance.gamma[k])
                             .t_total;
      }
    }
  }
  return tm;
}

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Homogeneous:
      return "homogeneous";
    case ScenarioKind::NonHomogeneousUnbounded:
      return "unbounded";
    case ScenarioKind::NonHomogeneousSized:
      return "sized";
  }
  return "unknown";
}

ScenarioKind parse_scenario(std::string_view name) {
  if (name == "homogeneous") return ScenarioKind::Homogeneous;
  if (name == "unbounded") return ScenarioKind::NonHomogeneousUnbounded;
  if (name == "sized") return ScenarioKind::NonHomogeneousSized;
  throw std::invalid_argument("unknown scenario '" + std::string(name) +
                              "' (expected homogeneous, unbounded or sized)");
}

std::vector<int> decode_indices(std::span<const double> x,
                                std::span<const int> counts) {
  if (x.size() != counts.size())
    throw std::invalid_argument("decode_indices: dimension mismatch");
  std::vector<int> out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) {
    // Clamp in floating point first so huge values cannot overflow int.
    const double f = std::floor(x[d]);
    const double clamped = std::clamp(std::isnan(f) ? 1.0 : f, 1.0,
                                      static_cast<double>(counts[d]));
    out[d] = static_cast<int>(clamped);
  }
  return out;
}

std::vector<int> decode_permutation(std::span<const double> keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<int> rank(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    rank[order[r]] = static_cast<int>(r) + 1;
  return rank;
}

int duplicated_pairs(const HomogeneousSolution& sol) {
  const auto& s = sol.supply_for_material;
  int pairs = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] == s[b]) ++pairs;
  return pairs;
}

double demand_cost(const TravelTimeMatrix& tm, const SiteInstance& instance,
                   std::size_t k, std::size_t i, std::size_t j) {
  const double t = tm.at(k, i, j);
  double cost = 0.0;
  for (const auto& row : instance.demand_quantities)
    cost += t * row[j] * instance.crane.cost_rate;
  return cost;
}

namespace {

void check_label(int label, std::size_t count, const char* what) {
  if (label < 1 || static_cast<std::size_t>(label) > count)
    throw std::out_of_range(std::string(what) + " index " +
                            std::to_string(label) + " out of range 1.." +
                            std::to_string(count));
}

}  // namespace

double evaluate_homogeneous(const HomogeneousSolution& sol,
                            const TravelTimeMatrix& tm,
                            const SiteInstance& instance,
                            double duplicate_penalty) {
  check_label(sol.crane, tm.cranes(), "crane");
  if (sol.supply_for_material.size() != instance.material_count())
    throw std::invalid_argument("homogeneous solution needs one supply per material");
  for (int s : sol.supply_for_material) check_label(s, tm.supplies(), "supply");

  const std::size_t k = static_cast<std::size_t>(sol.crane - 1);
  const double c = instance.crane.cost_rate;
  double total = 0.0;
  for (std::size_t j = 0; j < tm.demands(); ++j) {
    if (!instance.has_demand(j)) continue;
    for (std::size_t l = 0; l < instance.material_count(); ++l) {
      const auto i = static_cast<std::size_t>(sol.supply_for_material[l] - 1);
      total += tm.at(k, i, j) * instance.demand_quantities[l][j] * c;
    }
  }
  return total + duplicate_penalty * duplicated_pairs(sol);
}

double evaluate_assignment(const AssignmentSolution& sol,
                           const TravelTimeMatrix& tm,
                           const SiteInstance& instance) {
  check_label(sol.crane, tm.cranes(), "crane");
  if (sol.supply_for_demand.size() != tm.demands())
    throw std::invalid_argument("assignment needs one supply per demand point");
  for (int s : sol.supply_for_demand) check_label(s, tm.supplies(), "supply");

  const std::size_t k = static_cast<std::size_t>(sol.crane - 1);
  double total = 0.0;
  for (std::size_t j = 0; j < tm.demands(); ++j) {
    if (!instance.has_demand(j)) continue;
    const auto i = static_cast<std::size_t>(sol.supply_for_demand[j] - 1);
    total += demand_cost(tm, instance, k, i, j);
  }
  return total;
}

double evaluate(const Solution& sol, const TravelTimeMatrix& tm,
                const SiteInstance& instance, double duplicate_penalty) {
  if (const auto* h = std::get_if<HomogeneousSolution>(&sol))
    return evaluate_homogeneous(*h, tm, instance, duplicate_penalty);
  return evaluate_assignment(std::get<AssignmentSolution>(sol), tm, instance);
}

int crane_of(const Solution& sol) {
  return std::visit([](const auto& s) { return s.crane; }, sol);
}

const std::vector<int>& allocation_of(const Solution& sol) {
  if (const auto* h = std::get_if<HomogeneousSolution>(&sol))
    return h->supply_for_material;
  return std::get<AssignmentSolution>(sol).supply_for_demand;
}

namespace {

struct SharedSite {
  SiteInstance instance;
  TravelTimeMatrix tm;
  double penalty;
};

}  // namespace

ScenarioObjective objective_for(ScenarioKind kind, const SiteInstance& instance,
                                const TravelTimeMatrix& tm,
                                double duplicate_penalty) {
  const int cranes = static_cast<int>(instance.crane_count());
  const int supplies = static_cast<int>(instance.supply_count());
  const std::size_t demands = instance.demand_count();
  auto site = std::make_shared<const SharedSite>(
      SharedSite{instance, tm, duplicate_penalty});

  ScenarioObjective obj{kind, {}, {}, {}};
  std::function<Solution(std::span<const double>)> decode;

  switch (kind) {
    case ScenarioKind::Homogeneous:
    case ScenarioKind::NonHomogeneousUnbounded: {
      const std::size_t slots = kind == ScenarioKind::Homogeneous
                                    ? instance.material_count()
                                    : demands;
      std::vector<int> counts(1 + slots, supplies);
      counts[0] = cranes;
      for (int c : counts) {
        obj.bounds.lower.push_back(1.0);
        obj.bounds.upper.push_back(static_cast<double>(c) + 1.0);
      }
      const bool homogeneous = kind == ScenarioKind::Homogeneous;
      decode = [counts, homogeneous](std::span<const double> x) -> Solution {
        std::vector<int> idx = decode_indices(x, counts);
        const int crane = idx.front();
        idx.erase(idx.begin());
        if (homogeneous) return HomogeneousSolution{crane, std::move(idx)};
        return AssignmentSolution{crane, std::move(idx)};
      };
      break;
    }
    case ScenarioKind::NonHomogeneousSized: {
      if (instance.supply_count() != demands)
        throw std::invalid_argument(
            "sized scenario requires as many supply points as demand points");
      obj.bounds.lower.assign(1 + demands, 0.0);
      obj.bounds.upper.assign(1 + demands, 1.0);
      obj.bounds.lower[0] = 1.0;
      obj.bounds.upper[0] = static_cast<double>(cranes) + 1.0;
      decode = [cranes](std::span<const double> x) -> Solution {
        const std::array<int, 1> count{cranes};
        const int crane = decode_indices(x.first(1), count).front();
        return AssignmentSolution{crane, decode_permutation(x.subspan(1))};
      };
      break;
    }
  }

  obj.evaluate = [site, decode](std::span<const double> x) {
    return evaluate(decode(x), site->tm, site->instance, site->penalty);
  };
  obj.decode = std::move(decode);
  return obj;
}

}  // namespace cranesite
