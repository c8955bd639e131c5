#ifndef CRANESITE_PROBLEM_HPP_
#define CRANESITE_PROBLEM_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cranesite {

// Axis-aligned search box. Both ends are inclusive for the optimizers.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dimension() const { return lower.size(); }
  bool contains(std::span<const double> x) const;
};

// Throws std::invalid_argument unless the lengths agree and lower < upper
// on every axis.
void validate(const Bounds& bounds);

using Objective = std::function<double(std::span<const double>)>;

}  // namespace cranesite

#endif  // CRANESITE_PROBLEM_HPP_
