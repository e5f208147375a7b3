#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "metric_graphs/errors.hpp"
#include "metric_graphs/metric_space.hpp"
#include "metric_graphs/spaces.hpp"
#include "test_util.hpp"

using namespace metric_graphs;
using namespace test_util;

namespace {

void check_code(const Error& e, errc expected) { CHECK(e.code() == expected); }

#define CHECK_FAILS_WITH(expr, code)          \
  do {                                        \
    try {                                     \
      (void)(expr);                           \
      FAIL("expected " #expr " to throw");    \
    } catch (const Error& e) {                \
      check_code(e, code);                    \
    }                                         \
  } while (0)

}  // namespace

TEST_SUITE_BEGIN("metric-core");

TEST_CASE("from_points: four-point line+apex distances") {
  auto space = FiniteMetricSpace::from_points(four_point_cloud());
  CHECK(space.size() == 4);
  CHECK(space.dist(0, 3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(space.dist(1, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(space.dist(0, 2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(space.dist(2, 1) == space.dist(1, 2));
}

TEST_CASE("from_points: two points at distance 5") {
  auto space = FiniteMetricSpace::from_points(PointCloud{{{0, 0}, {3, 4}}, Norm::l2});
  CHECK(space.dist(0, 1) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(space.dist(0, 0) == 0.0);
}

TEST_CASE("from_points: basis vectors plus origin") {
  auto space = FiniteMetricSpace::from_points(diagonal_basis_cloud(3, 0.0));
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(space.dist(0, i) == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t j = i + 1; j <= 3; ++j) {
      CHECK(space.dist(i, j) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    }
  }
}

TEST_CASE("from_points: error paths") {
  CHECK_FAILS_WITH(FiniteMetricSpace::from_points(PointCloud{{{0, 0}, {0, 0}}, Norm::l2}),
                   errc::duplicate_point);
  CHECK_FAILS_WITH(FiniteMetricSpace::from_points(PointCloud{{{0, 0}, {1, 0, 0}}, Norm::l2}),
                   errc::dimension_mismatch);
  CHECK_FAILS_WITH(FiniteMetricSpace::from_points(PointCloud{{{1, 2}}, Norm::l2}),
                   errc::size_mismatch);
  // Within-tolerance coincidence is a duplicate too.
  PointCloud close{{{0, 0}, {0, 1e-12}}, Norm::l2};
  CHECK_FAILS_WITH(FiniteMetricSpace::from_points(close), errc::duplicate_point);
}

TEST_CASE("from_matrix: valid tie table") {
  auto space = tie_table_space();
  CHECK(space.size() == 4);
  CHECK(space.dist(0, 2) == 3.0);
  CHECK(space.dist(2, 3) == 3.0);
  CHECK(space.diameter() == 5.0);
  CHECK(space.provenance() == Provenance::matrix);
}

TEST_CASE("from_matrix: named validation errors") {
  CHECK_FAILS_WITH(FiniteMetricSpace::from_matrix({{0, 1, 7}, {1, 0, 5}, {7, 5, 0}}),
                   errc::triangle_violation);
  CHECK_FAILS_WITH(FiniteMetricSpace::from_matrix({{0, 0}, {0, 0}}), errc::zero_off_diagonal);
  CHECK_FAILS_WITH(FiniteMetricSpace::from_matrix({{0, 1}, {2, 0}}), errc::not_symmetric);
  CHECK_FAILS_WITH(FiniteMetricSpace::from_matrix({{0, -1}, {-1, 0}}), errc::negative_distance);
  CHECK_FAILS_WITH(FiniteMetricSpace::from_matrix({{1, 2}, {2, 0}}), errc::nonzero_diagonal);
  CHECK_FAILS_WITH(FiniteMetricSpace::from_matrix({{0, 1}, {1, 0}, {1, 1}}), errc::size_mismatch);
}

TEST_CASE("from_matrix: sub-tolerance triangle violations pass") {
  double d = 2.0 + 1e-12;  // exceeds 1+1 by far less than eq_tol
  auto space = FiniteMetricSpace::from_matrix({{0, 1, d}, {1, 0, 1}, {d, 1, 0}});
  CHECK(space.dist(0, 2) == d);
}

TEST_CASE("distance_set: tie table") {
  auto ds = distance_set(tie_table_space());
  CHECK(ds.values == std::vector<double>{0, 1, 2, 3, 4, 5});
  CHECK(ds.multiplicity[3] == 2);  // value 3 realized by xz and zt
  CHECK(ds.multiplicity[1] == 1);
  std::size_t positive = std::accumulate(ds.multiplicity.begin() + 1, ds.multiplicity.end(),
                                         std::size_t{0});
  CHECK(positive == 6);
}

TEST_CASE("distance_set: two points") {
  auto space = FiniteMetricSpace::from_points(PointCloud{{{0}, {5}}, Norm::l2});
  auto ds = distance_set(space);
  CHECK(ds.values == std::vector<double>{0, 5});
  CHECK(ds.multiplicity == std::vector<std::size_t>{2, 1});
}

TEST_CASE("distance_set: unit square corners") {
  // All 6 pairs by hand: four sides of length 1, two diagonals sqrt(2).
  auto ds = distance_set(FiniteMetricSpace::from_points(unit_square_cloud()));
  REQUIRE(ds.values.size() == 3);
  CHECK(ds.values[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ds.values[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ds.multiplicity[1] == 4);
  CHECK(ds.multiplicity[2] == 2);
}

TEST_CASE("distance_set: values within tolerance merge into the smallest") {
  ToleranceConfig tol{1e-3, ToleranceConfig::Scale::absolute};
  auto space = FiniteMetricSpace::from_matrix(
      {{0, 1.0, 2.0}, {1.0, 0, 1.0004}, {2.0, 1.0004, 0}}, tol);
  auto ds = distance_set(space);
  REQUIRE(ds.values.size() == 3);
  CHECK(ds.values[1] == 1.0);
  CHECK(ds.multiplicity[1] == 2);
  CHECK_FALSE(is_distance_separated(space));
}

TEST_CASE("mesh_delta") {
  CHECK(mesh_delta(distance_set(tie_table_space())) == 1.0);

  auto two = FiniteMetricSpace::from_points(PointCloud{{{0}, {5}}, Norm::l2});
  CHECK(mesh_delta(distance_set(two)) == 5.0);

  // Gaps of {0, 1, sqrt(2)}: min(1, sqrt(2)-1).
  auto square = FiniteMetricSpace::from_points(unit_square_cloud());
  CHECK(mesh_delta(distance_set(square)) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));

  DistanceSet degenerate{{0.0}, {1}};
  CHECK_FAILS_WITH(mesh_delta(degenerate), errc::degenerate_distance_set);
}

TEST_CASE("is_distance_separated") {
  CHECK_FALSE(is_distance_separated(tie_table_space()));
  CHECK(is_distance_separated(FiniteMetricSpace::from_points(PointCloud{{{0}, {5}}, Norm::l2})));
  CHECK_FALSE(is_distance_separated(FiniteMetricSpace::from_points(unit_square_cloud())));
}

TEST_CASE("relative tolerance scales with the diameter") {
  ToleranceConfig rel{1e-3, ToleranceConfig::Scale::relative_to_diameter};
  auto space = FiniteMetricSpace::from_matrix(
      {{0, 100.0, 200.0}, {100.0, 0, 100.05}, {200.0, 100.05, 0}}, rel);
  CHECK(space.tol() == doctest::Approx(0.2));
  CHECK_FALSE(is_distance_separated(space));  // 100 and 100.05 merge under 0.2
}

TEST_CASE("property: distance-set invariants over random clouds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto cloud = sample_cloud(SampleModel::uniform_cube(3, 1.0), 12, seed);
    auto space = FiniteMetricSpace::from_points(cloud);
    auto ds = distance_set(space);

    CHECK(std::is_sorted(ds.values.begin(), ds.values.end()));
    for (std::size_t k = 1; k < ds.values.size(); ++k) {
      CHECK(ds.values[k] > ds.values[k - 1]);
    }
    std::size_t positive = std::accumulate(ds.multiplicity.begin() + 1, ds.multiplicity.end(),
                                           std::size_t{0});
    CHECK(positive == 12 * 11 / 2);
    CHECK(ds.values.back() == space.diameter());
    // mesh(DM) <= r_1, the smallest positive distance
    CHECK(mesh_delta(ds) <= ds.values[1]);
    bool all_unique = true;
    for (std::size_t k = 1; k < ds.multiplicity.size(); ++k) {
      all_unique = all_unique && ds.multiplicity[k] == 1;
    }
    CHECK(is_distance_separated(space) == all_unique);
  }
}

TEST_CASE("property: from_points is permutation-invariant") {
  auto cloud = sample_cloud(SampleModel::uniform_cube(2, 1.0), 9, 7);
  auto space = FiniteMetricSpace::from_points(cloud);
  Bijection perm = random_bijection(9, 99);

  PointCloud relabeled;
  relabeled.norm = cloud.norm;
  relabeled.points.resize(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) relabeled.points[perm(i)] = cloud.points[i];
  auto space2 = FiniteMetricSpace::from_points(relabeled);

  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(space.dist(i, j) == space2.dist(perm(i), perm(j)));
    }
  }
}

TEST_SUITE_END();
