#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace metric_graphs {

enum class Norm { l1, l2, linf };

const char* norm_name(Norm norm);
Norm norm_from_name(const std::string& name);

// A finite subset of R^N together with the norm that metrises it.
// Invariants (enforced when a FiniteMetricSpace is built from it):
// all points share the same dimension N >= 1, there are at least two
// points, and no two points coincide under the chosen norm.
struct PointCloud {
  std::vector<std::vector<double>> points;
  Norm norm = Norm::l2;

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

double point_distance(const std::vector<double>& a, const std::vector<double>& b, Norm norm);

}  // namespace metric_graphs
