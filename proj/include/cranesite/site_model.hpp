#ifndef CRANESITE_SITE_MODEL_HPP_
#define CRANESITE_SITE_MODEL_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cranesite/kinematics.hpp"
#include "cranesite/problem.hpp"

namespace cranesite {

// One construction site: J demand points, I supply points, K candidate crane
// positions and L material types.
struct SiteInstance {
  std::vector<Point3> demand_points;
  std::vector<Point3> supply_points;
  std::vector<Point3> crane_positions;
  // Site-difficulty factor per crane position.
  std::vector<double> gamma;
  // demand_quantities[l][j]: units of material l required at demand j.
  std::vector<std::vector<double>> demand_quantities;
  CraneSpec crane;

  std::size_t demand_count() const { return demand_points.size(); }
  std::size_t supply_count() const { return supply_points.size(); }
  std::size_t crane_count() const { return crane_positions.size(); }
  std::size_t material_count() const { return demand_quantities.size(); }

  // A demand point only generates lifts when some material is required there.
  bool has_demand(std::size_t j) const;

  friend bool operator==(const SiteInstance&, const SiteInstance&) = default;
};

// Throws std::invalid_argument with a message naming the offending field.
void validate(const SiteInstance& instance);

// Hook travel times T[k][i][j] for every crane position, supply and demand.
class TravelTimeMatrix {
 public:
  TravelTimeMatrix(std::size_t cranes, std::size_t supplies,
                   std::size_t demands);

  double at(std::size_t k, std::size_t i, std::size_t j) const {
    return t_[index(k, i, j)];
  }
  double& at(std::size_t k, std::size_t i, std::size_t j) {
    return t_[index(k, i, j)];
  }

  std::size_t cranes() const { return cranes_; }
  std::size_t supplies() const { return supplies_; }
  std::size_t demands() const { return demands_; }

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const {
    return (k * supplies_ + i) * demands_ + j;
  }

  std::size_t cranes_;
  std::size_t supplies_;
  std::size_t demands_;
  std::vector<double> t_;
};

TravelTimeMatrix build_time_matrix(const SiteInstance& instance);

// Solutions use 1-based site labels, the way positions are numbered on the
// site plan.
struct HomogeneousSolution {
  int crane = 1;
  // One dedicated supply point per material type; must be pairwise distinct.
  std::vector<int> supply_for_material;

  friend bool operator==(const HomogeneousSolution&,
                         const HomogeneousSolution&) = default;
};

struct AssignmentSolution {
  int crane = 1;
  // The single supply point that serves each demand point.
  std::vector<int> supply_for_demand;

  friend bool operator==(const AssignmentSolution&,
                         const AssignmentSolution&) = default;
};

using Solution = std::variant<HomogeneousSolution, AssignmentSolution>;

enum class ScenarioKind { Homogeneous, NonHomogeneousUnbounded, NonHomogeneousSized };

std::string_view to_string(ScenarioKind kind);
// Accepts "homogeneous", "unbounded" and "sized".
ScenarioKind parse_scenario(std::string_view name);

inline constexpr double kDefaultDuplicatePenalty = 1e5;

// index_d = clamp(floor(x_d), 1, counts_d).
std::vector<int> decode_indices(std::span<const double> x,
                                std::span<const int> counts);

// Random-key decoding: demand j receives the rank (1-based) of keys[j] in an
// ascending stable sort, so equal keys favor the lower position.
std::vector<int> decode_permutation(std::span<const double> keys);

// Number of unordered pairs of materials sharing one supply point.
int duplicated_pairs(const HomogeneousSolution& sol);

// Cost of serving every material demand at j from supply i with the crane at
// k (all 0-based). Shared by the evaluators and the exhaustive oracle so both
// sum in the same order.
double demand_cost(const TravelTimeMatrix& tm, const SiteInstance& instance,
                   std::size_t k, std::size_t i, std::size_t j);

double evaluate_homogeneous(const HomogeneousSolution& sol,
                            const TravelTimeMatrix& tm,
                            const SiteInstance& instance,
                            double duplicate_penalty = kDefaultDuplicatePenalty);

double evaluate_assignment(const AssignmentSolution& sol,
                           const TravelTimeMatrix& tm,
                           const SiteInstance& instance);

// A scenario exposed as a bounded continuous objective. `decode` maps any
// in-bounds vector to the discrete solution it encodes.
struct ScenarioObjective {
  ScenarioKind kind;
  Bounds bounds;
  Objective evaluate;
  std::function<Solution(std::span<const double>)> decode;

  std::size_t dimension() const { return bounds.dimension(); }
};

// Homogeneous: [crane, supply per material], floor-decoded.
// Unbounded:   [crane, supply per demand], floor-decoded.
// Sized:       [crane, J random keys in [0, 1]]; requires I == J.
ScenarioObjective objective_for(ScenarioKind kind, const SiteInstance& instance,
                                const TravelTimeMatrix& tm,
                                double duplicate_penalty = kDefaultDuplicatePenalty);

double evaluate(const Solution& sol, const TravelTimeMatrix& tm,
                const SiteInstance& instance,
                double duplicate_penalty = kDefaultDuplicatePenalty);

int crane_of(const Solution& sol);
// The allocation row (supplies per material, or per demand).
const std::vector<int>& allocation_of(const Solution& sol);

}  // namespace cranesite

#endif  // CRANESITE_SITE_MODEL_HPP_
