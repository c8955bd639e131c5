#ifndef CRANESITE_INSTANCE_IO_HPP_
#define CRANESITE_INSTANCE_IO_HPP_

// Site-instance files are JSON documents:
//
//   {
//     "format": "cranesite-instance/1",
//     "demand_points_m":   [[x, y, z], ...],          // J entries
//     "supply_points_m":   [[x, y, z], ...],          // I entries
//     "crane_positions_m": [[x, y, z], ...],          // K entries
//     "gamma":             [g_1, ..., g_K],
//     "demand_quantities_units": [[q_11, ..., q_1J],  // L rows
//                                 ...],
//     "crane": {
//       "v_hoist_m_per_min": ..., "v_radial_m_per_min": ...,
//       "v_slew_rad_per_min": ..., "alpha": ..., "beta": ...,
//       "cost_rate_per_min": ...
//     }
//   }
//
// The z coordinate of demand and supply points is the hook height at that
// point.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cranesite/site_model.hpp"

namespace cranesite {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kInstanceFormat = "cranesite-instance/1";

// Parses and validates. Throws InstanceError naming the offending field.
SiteInstance parse_instance(std::string_view text);
SiteInstance load_instance(const std::filesystem::path& path);

std::string dump_instance(const SiteInstance& instance);
void save_instance(const SiteInstance& instance,
                   const std::filesystem::path& path);

}  // namespace cranesite

#endif  // CRANESITE_INSTANCE_IO_HPP_
