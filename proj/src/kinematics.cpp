#include "cranesite/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cranesite {

namespace {

// max(a, b) + weight * min(a, b): weight 0 means both motions overlap fully,
// weight 1 means they run back to back.
double coordinate(double a, double b, double weight) {
  return std::max(a, b) + weight * std::min(a, b);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void validate(const CraneSpec& spec) {
  require(std::isfinite(spec.v_hoist) && spec.v_hoist > 0.0,
          "v_hoist must be positive");
  require(std::isfinite(spec.v_radial) && spec.v_radial > 0.0,
          "v_radial must be positive");
  require(std::isfinite(spec.v_slew) && spec.v_slew > 0.0,
          "v_slew must be positive");
  require(spec.alpha >= 0.0 && spec.alpha <= 1.0, "alpha must lie in [0, 1]");
  require(spec.beta >= 0.0 && spec.beta <= 1.0, "beta must lie in [0, 1]");
  require(std::isfinite(spec.cost_rate) && spec.cost_rate >= 0.0,
          "cost_rate must be non-negative");
}

double radial_distance(const Point3& p, const Point3& crane) {
  return std::hypot(p.x - crane.x, p.y - crane.y);
}

double chord_distance(const Point3& s, const Point3& d) {
  return std::hypot(s.x - d.x, s.y - d.y);
}

double radial_time(double rho_d, double rho_s, double v_radial) {
  return std::abs(rho_d - rho_s) / v_radial;
}

double slew_time(double chord, double rho_d, double rho_s, double v_slew) {
  if (rho_d < kDegenerateRadius || rho_s < kDegenerateRadius) return 0.0;
  const double cosine =
      (rho_d * rho_d + rho_s * rho_s - chord * chord) / (2.0 * rho_d * rho_s);
  return std::acos(std::clamp(cosine, -1.0, 1.0)) / v_slew;
}

double horizontal_time(double t_radial, double t_slew, double alpha) {
  return coordinate(t_radial, t_slew, alpha);
}

double vertical_time(double z_d, double z_s, double v_hoist) {
  return std::abs(z_d - z_s) / v_hoist;
}

HookTravel travel_time(const Point3& supply, const Point3& demand,
                       const Point3& crane, const CraneSpec& spec,
                       double gamma) {
  const double rho_d = radial_distance(demand, crane);
  const double rho_s = radial_distance(supply, crane);
  const double chord = chord_distance(supply, demand);

  HookTravel out;
  out.t_radial = radial_time(rho_d, rho_s, spec.v_radial);
  out.t_slew = slew_time(chord, rho_d, rho_s, spec.v_slew);
  out.t_horizontal = horizontal_time(out.t_radial, out.t_slew, spec.alpha);
  out.t_vertical = vertical_time(demand.z, supply.z, spec.v_hoist);
  out.t_total = gamma * coordinate(out.t_horizontal, out.t_vertical, spec.beta);
  return out;
}

}  // namespace cranesite
