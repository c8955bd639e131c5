#ifndef CRANESITE_ORACLE_HPP_
#define CRANESITE_ORACLE_HPP_

// Exhaustive ground truth for the three supply scenarios. Each oracle
// enumerates its whole feasible set, so it is only meant for desk-scale
// instances (K * J! up to roughly 1e8 for the sized scenario).

#include <cstdint>

#include "cranesite/site_model.hpp"

namespace cranesite {

struct OracleResult {
  double best_cost = 0.0;
  Solution best_solution;
  // Candidates (or, for the unbounded scenario, comparisons) examined.
  std::uint64_t enumerated = 0;
};

// Every crane position times every ordered tuple of distinct supplies, one per
// material: K * I! / (I - L)! candidates. Throws std::invalid_argument when
// L > I.
OracleResult oracle_homogeneous(const TravelTimeMatrix& tm,
                                const SiteInstance& instance);

// For each crane position, each demand independently takes its cheapest
// supply (lowest index on ties). K * J * I comparisons.
OracleResult oracle_unbounded(const TravelTimeMatrix& tm,
                              const SiteInstance& instance);

// Every crane position times every bijection supply <-> demand: K * J!
// candidates. Throws std::invalid_argument when I != J.
OracleResult oracle_sized(const TravelTimeMatrix& tm,
                          const SiteInstance& instance);

OracleResult run_oracle(ScenarioKind kind, const TravelTimeMatrix& tm,
                        const SiteInstance& instance);

}  // namespace cranesite

#endif  // CRANESITE_ORACLE_HPP_
