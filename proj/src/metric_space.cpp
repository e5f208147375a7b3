#include "metric_graphs/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "metric_graphs/errors.hpp"
#include "metric_graphs/io.hpp"

namespace metric_graphs {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

double table_diameter(const std::vector<double>& table) {
  double d = 0.0;
  for (double v : table) d = std::max(d, v);
  return d;
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_points(PointCloud cloud, ToleranceConfig tol) {
  const std::size_t m = cloud.size();
  if (m < 2) fail(errc::size_mismatch, "a metric space needs at least 2 points, got " + std::to_string(m));
  const std::size_t dim = cloud.dim();
  if (dim == 0) fail(errc::dimension_mismatch, "points must have dimension >= 1");
  for (std::size_t i = 0; i < m; ++i) {
    if (cloud.points[i].size() != dim) {
      fail(errc::dimension_mismatch, "point " + std::to_string(i) + " has dimension " +
                                         std::to_string(cloud.points[i].size()) + ", expected " +
                                         std::to_string(dim));
    }
  }

  FiniteMetricSpace space;
  space.m_ = m;
  space.table_.assign(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double d = point_distance(cloud.points[i], cloud.points[j], cloud.norm);
      space.table_[i * m + j] = d;
      space.table_[j * m + i] = d;
    }
  }
  space.diameter_ = table_diameter(space.table_);
  space.config_ = tol;
  space.tol_eff_ = tol.effective(space.diameter_);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (space.table_[i * m + j] <= space.tol_eff_) {
        fail(errc::duplicate_point, "points " + pair_str(i, j) + " coincide within tolerance");
      }
    }
  }
  space.cloud_ = std::move(cloud);
  return space;
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& table,
                                                 ToleranceConfig tol) {
  const std::size_t m = table.size();
  if (m < 2) fail(errc::size_mismatch, "a metric space needs at least 2 points, got " + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (table[i].size() != m) {
      fail(errc::size_mismatch, "row " + std::to_string(i) + " has " +
                                    std::to_string(table[i].size()) + " columns, expected " +
                                    std::to_string(m));
    }
  }

  FiniteMetricSpace space;
  space.m_ = m;
  space.table_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) space.table_[i * m + j] = table[i][j];

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double d = space.table_[i * m + j];
      if (std::isnan(d) || d < 0.0) {
        fail(errc::negative_distance,
             "dist" + pair_str(i, j) + " = " + format_double(d) + " is negative");
      }
      if (i == j && d != 0.0) {
        fail(errc::nonzero_diagonal, "dist" + pair_str(i, i) + " = " + format_double(d) +
                                         ", the diagonal must be exactly 0");
      }
      if (d != space.table_[j * m + i]) {
        fail(errc::not_symmetric, "dist" + pair_str(i, j) + " = " + format_double(d) +
                                      " but dist" + pair_str(j, i) + " = " +
                                      format_double(space.table_[j * m + i]));
      }
    }
  }

  space.diameter_ = table_diameter(space.table_);
  space.config_ = tol;
  space.tol_eff_ = tol.effective(space.diameter_);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (space.table_[i * m + j] <= space.tol_eff_) {
        fail(errc::zero_off_diagonal,
             "dist" + pair_str(i, j) + " is zero (within tolerance) off the diagonal");
      }
    }
  }
  // One-sided slack: violations smaller than the tolerance pass, so
  // near-metric measured tables are accepted.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k < m; ++k) {
      double dik = space.table_[i * m + k];
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i || j == k) continue;
        double via = space.table_[i * m + j] + space.table_[j * m + k];
        if (dik > via + space.tol_eff_) {
          fail(errc::triangle_violation,
               "dist" + pair_str(i, k) + " = " + format_double(dik) + " exceeds dist" +
                   pair_str(i, j) + " + dist" + pair_str(j, k) + " = " + format_double(via));
        }
      }
    }
  }
  return space;
}

FiniteMetricSpace FiniteMetricSpace::from_table_unchecked(std::vector<double> table, std::size_t m,
                                                          ToleranceConfig tol) {
  FiniteMetricSpace space;
  space.m_ = m;
  space.table_ = std::move(table);
  space.diameter_ = table_diameter(space.table_);
  space.config_ = tol;
  space.tol_eff_ = tol.effective(space.diameter_);
  return space;
}

std::size_t DistanceSet::index_of(double d) const {
  auto it = std::upper_bound(values.begin(), values.end(), d);
  if (it == values.begin()) return 0;  // d below every value: only d == 0 qualifies
  return static_cast<std::size_t>(it - values.begin()) - 1;
}

DistanceSet distance_set(const FiniteMetricSpace& space) {
  const std::size_t m = space.size();
  std::vector<double> pairs;
  pairs.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.push_back(space.dist(i, j));
  std::sort(pairs.begin(), pairs.end());

  DistanceSet out;
  out.values.push_back(0.0);
  out.multiplicity.push_back(m);  // diagonal pairs
  // Cluster scan: a value joins the current cluster when it lies within the
  // tolerance of the cluster's representative (its smallest member). Validation
  // guarantees positive distances exceed the tolerance, so nothing merges into 0.
  for (double d : pairs) {
    if (d - out.values.back() <= space.tol()) {
      ++out.multiplicity.back();
    } else {
      out.values.push_back(d);
      out.multiplicity.push_back(1);
    }
  }
  return out;
}

double mesh_delta(const DistanceSet& distances) {
  if (distances.values.size() < 2) {
    fail(errc::degenerate_distance_set,
         "mesh is undefined for a single-valued distance set");
  }
  double best = distances.values[1] - distances.values[0];
  for (std::size_t k = 2; k < distances.values.size(); ++k) {
    best = std::min(best, distances.values[k] - distances.values[k - 1]);
  }
  return best;
}

bool is_distance_separated(const FiniteMetricSpace& space) {
  const std::size_t m = space.size();
  return distance_set(space).values.size() - 1 == m * (m - 1) / 2;
}

}  // namespace metric_graphs
