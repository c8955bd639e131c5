#include "cranesite/problem.hpp"

#include <stdexcept>
#include <string>

namespace cranesite {

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (!(x[d] >= lower[d] && x[d] <= upper[d])) return false;
  }
  return true;
}

void validate(const Bounds& bounds) {
  if (bounds.lower.size() != bounds.upper.size())
    throw std::invalid_argument("bounds: lower and upper differ in length");
  if (bounds.lower.empty())
    throw std::invalid_argument("bounds: dimension must be at least 1");
  for (std::size_t d = 0; d < bounds.lower.size(); ++d) {
    if (!(bounds.lower[d] < bounds.upper[d]))
      throw std::invalid_argument("bounds: lower must be below upper on axis " +
                                  std::to_string(d));
  }
}

}  // namespace cranesite
