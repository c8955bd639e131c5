#ifndef CRANESITE_KINEMATICS_HPP_
#define CRANESITE_KINEMATICS_HPP_

// Hook travel-time model for a single tower crane.
//
// Distances are in meters, velocities in meters (or radians) per minute and
// every returned time is in minutes. Plan-view quantities ignore z; the
// vertical leg only uses the difference between the demand and supply hook
// heights.

namespace cranesite {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

struct CraneSpec {
  double v_hoist = 0.0;   // m/min
  double v_radial = 0.0;  // m/min
  double v_slew = 0.0;    // rad/min
  // Radial/tangential coordination, 0 = simultaneous, 1 = sequential.
  double alpha = 0.0;
  // Horizontal/vertical coordination, same convention as alpha.
  double beta = 0.0;
  double cost_rate = 0.0;  // cost-units/min

  friend bool operator==(const CraneSpec&, const CraneSpec&) = default;
};

// Throws std::invalid_argument naming the offending field.
void validate(const CraneSpec& spec);

struct HookTravel {
  double t_radial = 0.0;
  double t_slew = 0.0;
  double t_horizontal = 0.0;
  double t_vertical = 0.0;
  double t_total = 0.0;
};

// Radii below this are treated as "hook at the mast".
inline constexpr double kDegenerateRadius = 1e-9;

double radial_distance(const Point3& p, const Point3& crane);
double chord_distance(const Point3& s, const Point3& d);
double radial_time(double rho_d, double rho_s, double v_radial);

// Slewing time through the included angle at the mast (law of cosines).
// The cosine is clamped to [-1, 1]; a zero radius yields zero time.
double slew_time(double chord, double rho_d, double rho_s, double v_slew);

double horizontal_time(double t_radial, double t_slew, double alpha);
double vertical_time(double z_d, double z_s, double v_hoist);

// Full decomposition of one supply -> demand lift for a crane at `crane`.
// `gamma` is the site-difficulty factor of that crane position.
HookTravel travel_time(const Point3& supply, const Point3& demand,
                       const Point3& crane, const CraneSpec& spec,
                       double gamma);

}  // namespace cranesite

#endif  // CRANESITE_KINEMATICS_HPP_
