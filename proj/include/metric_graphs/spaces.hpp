#pragma once

#include <cstdint>
#include <vector>

#include "metric_graphs/metric_space.hpp"
#include "metric_graphs/point_cloud.hpp"
#include "metric_graphs/rng.hpp"
#include "metric_graphs/tolerance.hpp"

namespace metric_graphs {

// A vertex correspondence between two spaces of equal cardinality.
struct Bijection {
  std::vector<std::size_t> forward;

  static Bijection identity(std::size_t m);
  Bijection inverse() const;
  std::size_t size() const { return forward.size(); }
  std::size_t operator()(std::size_t i) const { return forward[i]; }

  // Throws size_mismatch if forward is not a permutation of {0..m-1}.
  void validate() const;
};

// Maximum ambient displacement of f: max_x |x - f(x)| under the clouds'
// shared norm. Throws size_mismatch, dimension_mismatch, norm_mismatch.
double separation(const PointCloud& a, const PointCloud& b, const Bijection& f);

// Overload for spaces carrying point-cloud provenance.
double separation(const FiniteMetricSpace& a, const FiniteMetricSpace& b, const Bijection& f);

struct BottleneckResult {
  double distance;
  Bijection matching;
};

// d_B(a, b): minimum separation over all bijections, plus one achieving
// bijection. Binary search over the sorted m^2 cross-distances with a
// perfect-matching feasibility test at each threshold; the optimum is always
// one of the candidate values, so the result is exact.
BottleneckResult bottleneck_distance(const PointCloud& a, const PointCloud& b,
                                     std::size_t cap = 512);

// Exhaustive oracle over all m! bijections; throws too_large for m > 8.
double bottleneck_bruteforce(const PointCloud& a, const PointCloud& b);

struct PerturbReport {
  PointCloud output;
  double displacement;  // max per-point move actually applied, < epsilon
  std::size_t attempts;
  std::uint64_t seed;
};

// Randomized realization of the density theorem: jitter every point
// independently and uniformly in the ball of radius epsilon/2 (so the
// identity bijection certifies d_B < epsilon) and accept the first attempt
// that is distance separated. The excluded configurations have measure zero,
// so acceptance is almost sure; max_attempts bounds the tail. Throws
// exhausted_attempts with the surviving tied pair in the message.
PerturbReport perturb_to_ds(const PointCloud& cloud, double epsilon, std::uint64_t seed,
                            std::size_t max_attempts = 64, ToleranceConfig tol = {});

struct SampleModel {
  enum class Kind { uniform_cube, grid, jittered_grid };

  Kind kind = Kind::uniform_cube;
  std::size_t dim = 2;
  double side = 1.0;     // uniform_cube
  std::size_t k = 0;     // grid / jittered_grid: points per axis, spacing 1
  double sigma = 0.0;    // jittered_grid: per-coordinate uniform in [-sigma, sigma]

  static SampleModel uniform_cube(std::size_t dim, double side);
  static SampleModel grid(std::size_t dim, std::size_t k);
  static SampleModel jittered_grid(std::size_t dim, std::size_t k, double sigma);
};

// Deterministic for a fixed seed. Grid models enumerate lattice points in
// row-major order (maximally tied inputs); uniform cubes are almost surely
// distance separated. Throws infeasible_model when m exceeds the grid size
// or parameters are degenerate.
PointCloud sample_cloud(const SampleModel& model, std::size_t m, std::uint64_t seed);

// Euclidean isometry of R^N plus a vertex relabeling. An empty relabeling
// acts as the identity on clouds of any size.
struct RigidMotion {
  std::vector<std::vector<double>> rotation;  // N x N orthogonal
  std::vector<double> translation;
  Bijection relabeling;
};

// Orthogonal matrix from Gram-Schmidt over gaussian draws, translation
// uniform in [-1,1]^N, identity relabeling.
RigidMotion random_rigid_motion(std::size_t dim, std::uint64_t seed);

Bijection random_bijection(std::size_t m, std::uint64_t seed);

// Moves every point and writes it to its relabeled slot:
// out[relabeling(i)] = R * p_i + t.
PointCloud apply(const RigidMotion& motion, const PointCloud& cloud);

}  // namespace metric_graphs
