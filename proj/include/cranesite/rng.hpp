#ifndef CRANESITE_RNG_HPP_
#define CRANESITE_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace cranesite {

// Seedable generator whose output is identical on every conforming platform.
//
// std::mt19937_64 is fully specified by the standard; the distributions in
// <random> are not, so the conversions to reals and bounded integers are done
// here by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform on [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  // Uniform integer on [0, n), n > 0, by rejection (no modulo bias).
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % bound);
  }

  // Seed of an independent stream derived from `seed` (splitmix64 finalizer).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cranesite

#endif  // CRANESITE_RNG_HPP_
