#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace previse {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic generator. mt19937_64 is fully specified by the standard and
// all derived draws below avoid std::*_distribution, whose output is
// implementation-defined; results are therefore stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Independent stream for a work item; insensitive to scheduling order.
  static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
    return Rng(splitmix64(master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n); n must be positive. Rejection sampling kills bias.
  std::size_t next_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("next_index: empty range");
    std::uint64_t bound = n;
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  // Draws an index proportional to non-negative weights (need not sum to 1).
  std::size_t next_categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0))
      throw std::invalid_argument("next_categorical: no positive mass");
    double u = next_double() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    // Rounding can push u past the last bucket; return the last positive one.
    for (std::size_t i = weights.size(); i-- > 0;)
      if (weights[i] > 0.0) return i;
    throw std::logic_error("next_categorical: unreachable");
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace previse
