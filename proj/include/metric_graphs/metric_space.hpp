#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metric_graphs/point_cloud.hpp"
#include "metric_graphs/tolerance.hpp"

namespace metric_graphs {

enum class Provenance { points, matrix };

// A finite metric space (M, d): m points with an exact pairwise distance
// table. Immutable after construction; all invariants (symmetry, zero
// diagonal, positivity off the diagonal, triangle inequality) are validated
// by the factory functions.
class FiniteMetricSpace {
 public:
  // Builds the space from a point cloud under its norm.
  // Throws: duplicate_point, dimension_mismatch, size_mismatch.
  static FiniteMetricSpace from_points(PointCloud cloud, ToleranceConfig tol = {});

  // Builds the space from an explicit square table and validates every
  // invariant. Throws: not_symmetric, negative_distance, nonzero_diagonal,
  // zero_off_diagonal, triangle_violation (each names the offending indices).
  static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& table,
                                       ToleranceConfig tol = {});

  // Trusted entry for tables that satisfy the metric axioms by construction
  // (e.g. path metrics of connected graphs). Skips the O(m^3) triangle scan.
  static FiniteMetricSpace from_table_unchecked(std::vector<double> table, std::size_t m,
                                                ToleranceConfig tol = {});

  std::size_t size() const { return m_; }
  double dist(std::size_t i, std::size_t j) const { return table_[i * m_ + j]; }
  double diameter() const { return diameter_; }

  // Effective absolute tolerance for this space (relative configs are
  // resolved against the diameter once, at construction).
  double tol() const { return tol_eff_; }
  const ToleranceConfig& tolerance_config() const { return config_; }
  bool dist_eq(double a, double b) const { return nearly_equal(a, b, tol_eff_); }

  Provenance provenance() const { return cloud_ ? Provenance::points : Provenance::matrix; }
  const std::optional<PointCloud>& cloud() const { return cloud_; }

 private:
  FiniteMetricSpace() = default;

  std::size_t m_ = 0;
  std::vector<double> table_;  // row-major m x m, symmetric
  double diameter_ = 0.0;
  double tol_eff_ = 0.0;
  ToleranceConfig config_;
  std::optional<PointCloud> cloud_;
};

// The sorted set of values attained by d, including 0. Values of the source
// space that agree within its tolerance are merged into one representative,
// the smallest of the cluster. multiplicity[k] counts unordered point pairs
// realizing values[k]; the 0 entry counts the m diagonal pairs.
struct DistanceSet {
  std::vector<double> values;
  std::vector<std::size_t> multiplicity;

  // Index of the merged representative of a distance attained by the source
  // space. Only meaningful for such distances.
  std::size_t index_of(double d) const;
};

DistanceSet distance_set(const FiniteMetricSpace& space);

// Smallest gap between distinct values of the distance set (0 participates).
// Throws degenerate_distance_set when fewer than two values exist.
double mesh_delta(const DistanceSet& distances);

// True iff all m(m-1)/2 positive pairwise distances are pairwise distinct
// under the space's tolerance.
bool is_distance_separated(const FiniteMetricSpace& space);

}  // namespace metric_graphs
