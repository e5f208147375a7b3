#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace metric_graphs {

enum class Norm;  // point_cloud.hpp

// Deterministic random source. The engine is std::mt19937_64, whose output
// stream for a given seed is fixed by the C++ standard; every derived
// quantity below is produced by an explicit recipe instead of the standard
// <random> distributions, which are allowed to differ between library
// implementations. Identical seeds therefore give identical artifacts on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1): top 53 bits of the next engine output.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n) by rejection on the top of the 64-bit range.
  std::uint64_t below(std::uint64_t n);

  // Standard normal via the Marsaglia polar method (second value cached).
  double gaussian();

  // Standard exponential.
  double exponential() { return -std::log(1.0 - uniform01()); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Uniform sample from the closed ball of the given radius around the origin,
// under the given norm.
std::vector<double> sample_in_ball(Rng& rng, std::size_t dim, double radius, Norm norm);

}  // namespace metric_graphs
