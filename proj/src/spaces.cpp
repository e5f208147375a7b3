#include "metric_graphs/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "metric_graphs/errors.hpp"
#include "metric_graphs/io.hpp"

namespace metric_graphs {

Bijection Bijection::identity(std::size_t m) {
  Bijection f;
  f.forward.resize(m);
  std::iota(f.forward.begin(), f.forward.end(), std::size_t{0});
  return f;
}

Bijection Bijection::inverse() const {
  validate();
  Bijection inv;
  inv.forward.resize(forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) inv.forward[forward[i]] = i;
  return inv;
}

void Bijection::validate() const {
  const std::size_t m = forward.size();
  std::vector<char> seen(m, 0);
  for (std::size_t v : forward) {
    if (v >= m || seen[v]) {
      fail(errc::size_mismatch, "bijection is not a permutation of 0.." + std::to_string(m - 1));
    }
    seen[v] = 1;
  }
}

namespace {

void check_cloud_pair(const PointCloud& a, const PointCloud& b) {
  if (a.size() != b.size()) {
    fail(errc::size_mismatch, "clouds have " + std::to_string(a.size()) + " and " +
                                  std::to_string(b.size()) + " points");
  }
  if (a.dim() != b.dim()) {
    fail(errc::dimension_mismatch, "clouds live in R^" + std::to_string(a.dim()) + " and R^" +
                                       std::to_string(b.dim()));
  }
  if (a.norm != b.norm) {
    fail(errc::norm_mismatch, std::string("clouds carry different norms (") + norm_name(a.norm) +
                                  " vs " + norm_name(b.norm) + ")");
  }
}

const PointCloud& provenance_cloud(const FiniteMetricSpace& space) {
  if (!space.cloud()) {
    fail(errc::missing_provenance, "operation needs point-cloud provenance, space was built from a matrix");
  }
  return *space.cloud();
}

}  // namespace

double separation(const PointCloud& a, const PointCloud& b, const Bijection& f) {
  check_cloud_pair(a, b);
  if (f.size() != a.size()) {
    fail(errc::size_mismatch, "bijection size does not match the clouds");
  }
  f.validate();
  double sep = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sep = std::max(sep, point_distance(a.points[i], b.points[f(i)], a.norm));
  }
  return sep;
}

double separation(const FiniteMetricSpace& a, const FiniteMetricSpace& b, const Bijection& f) {
  return separation(provenance_cloud(a), provenance_cloud(b), f);
}

namespace {

// Kuhn's augmenting-path matching restricted to pairs with cross distance
// <= threshold. Deterministic: rows and columns are scanned in index order.
struct ThresholdMatcher {
  const std::vector<double>& cross;  // m*m row-major
  std::size_t m;
  std::vector<std::size_t> match_of_b;
  std::vector<char> visited;

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  bool augment(std::size_t i, double threshold) {
    for (std::size_t j = 0; j < m; ++j) {
      if (visited[j] || cross[i * m + j] > threshold) continue;
      visited[j] = 1;
      if (match_of_b[j] == npos || augment(match_of_b[j], threshold)) {
        match_of_b[j] = i;
        return true;
      }
    }
    return false;
  }

  // Returns the matching a->b if perfect, empty otherwise.
  std::vector<std::size_t> perfect_matching(double threshold) {
    match_of_b.assign(m, npos);
    for (std::size_t i = 0; i < m; ++i) {
      visited.assign(m, 0);
      if (!augment(i, threshold)) return {};
    }
    std::vector<std::size_t> forward(m, npos);
    for (std::size_t j = 0; j < m; ++j) forward[match_of_b[j]] = j;
    return forward;
  }
};

std::vector<double> cross_distances(const PointCloud& a, const PointCloud& b) {
  const std::size_t m = a.size();
  std::vector<double> cross(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cross[i * m + j] = point_distance(a.points[i], b.points[j], a.norm);
    }
  }
  return cross;
}

}  // namespace

BottleneckResult bottleneck_distance(const PointCloud& a, const PointCloud& b, std::size_t cap) {
  check_cloud_pair(a, b);
  const std::size_t m = a.size();
  if (m > cap) {
    fail(errc::too_large, "bottleneck matching capped at " + std::to_string(cap) + " points, got " +
                              std::to_string(m));
  }
  std::vector<double> cross = cross_distances(a, b);

  // The optimum is one of the m^2 cross distances: binary search the sorted
  // candidate list with a perfect-matching feasibility probe.
  std::vector<double> candidates = cross;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  ThresholdMatcher matcher{cross, m, {}, {}};
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matcher.perfect_matching(candidates[mid]).empty()) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  std::vector<std::size_t> forward = matcher.perfect_matching(candidates[lo]);
  if (forward.empty()) {
    fail(errc::internal_invariant, "no perfect matching at the maximal threshold");
  }
  return BottleneckResult{candidates[lo], Bijection{std::move(forward)}};
}

double bottleneck_bruteforce(const PointCloud& a, const PointCloud& b) {
  check_cloud_pair(a, b);
  const std::size_t m = a.size();
  if (m > 8) {
    fail(errc::too_large, "brute-force bottleneck is limited to 8 points, got " + std::to_string(m));
  }
  std::vector<double> cross = cross_distances(a, b);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double sep = 0.0;
    for (std::size_t i = 0; i < m; ++i) sep = std::max(sep, cross[i * m + perm[i]]);
    best = std::min(best, sep);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

std::string tied_pair_diagnostic(const FiniteMetricSpace& space) {
  const DistanceSet ds = distance_set(space);
  for (std::size_t k = 1; k < ds.values.size(); ++k) {
    if (ds.multiplicity[k] < 2) continue;
    // Name the first two pairs that share this merged value.
    std::string pairs;
    std::size_t found = 0;
    for (std::size_t i = 0; i < space.size() && found < 2; ++i) {
      for (std::size_t j = i + 1; j < space.size() && found < 2; ++j) {
        if (ds.index_of(space.dist(i, j)) == k) {
          pairs += (found ? " and d(" : "d(") + std::to_string(i) + "," + std::to_string(j) + ")";
          ++found;
        }
      }
    }
    return pairs + " remained tied at " + format_double(ds.values[k]);
  }
  return "no tie found";
}

}  // namespace

PerturbReport perturb_to_ds(const PointCloud& cloud, double epsilon, std::uint64_t seed,
                            std::size_t max_attempts, ToleranceConfig tol) {
  if (!(epsilon > 0.0)) fail(errc::infeasible_model, "epsilon must be positive");
  if (max_attempts == 0) fail(errc::infeasible_model, "max_attempts must be at least 1");
  // Validates the input invariants up front.
  FiniteMetricSpace::from_points(cloud, tol);

  Rng rng(seed);
  const double radius = epsilon / 2.0;
  std::string last_tie = "no attempt was evaluated";

  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    PointCloud jittered = cloud;
    double displacement = 0.0;
    for (std::size_t i = 0; i < jittered.size(); ++i) {
      const std::vector<double> offset = sample_in_ball(rng, cloud.dim(), radius, cloud.norm);
      for (std::size_t c = 0; c < offset.size(); ++c) jittered.points[i][c] += offset[c];
      displacement =
          std::max(displacement, point_distance(cloud.points[i], jittered.points[i], cloud.norm));
    }
    try {
      FiniteMetricSpace space = FiniteMetricSpace::from_points(jittered, tol);
      if (is_distance_separated(space)) {
        return PerturbReport{std::move(jittered), displacement, attempt, seed};
      }
      last_tie = tied_pair_diagnostic(space);
    } catch (const Error& e) {
      if (e.code() != errc::duplicate_point) throw;
      last_tie = std::string("jitter produced coincident points (") + e.what() + ")";
    }
  }
  fail(errc::exhausted_attempts, "no distance-separated perturbation within " +
                                     std::to_string(max_attempts) + " attempts; " + last_tie);
}

SampleModel SampleModel::uniform_cube(std::size_t dim, double side) {
  SampleModel model;
  model.kind = Kind::uniform_cube;
  model.dim = dim;
  model.side = side;
  return model;
}

SampleModel SampleModel::grid(std::size_t dim, std::size_t k) {
  SampleModel model;
  model.kind = Kind::grid;
  model.dim = dim;
  model.k = k;
  return model;
}

SampleModel SampleModel::jittered_grid(std::size_t dim, std::size_t k, double sigma) {
  SampleModel model;
  model.kind = Kind::jittered_grid;
  model.dim = dim;
  model.k = k;
  model.sigma = sigma;
  return model;
}

PointCloud sample_cloud(const SampleModel& model, std::size_t m, std::uint64_t seed) {
  if (model.dim < 1) fail(errc::infeasible_model, "model dimension must be >= 1");
  if (m < 2) fail(errc::infeasible_model, "a sampled cloud needs at least 2 points");

  PointCloud cloud;
  cloud.norm = Norm::l2;
  cloud.points.reserve(m);
  Rng rng(seed);

  switch (model.kind) {
    case SampleModel::Kind::uniform_cube: {
      if (!(model.side > 0.0)) fail(errc::infeasible_model, "cube side must be positive");
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> p(model.dim);
        for (auto& c : p) c = model.side * rng.uniform01();
        cloud.points.push_back(std::move(p));
      }
      return cloud;
    }
    case SampleModel::Kind::grid:
    case SampleModel::Kind::jittered_grid: {
      if (model.k < 1) fail(errc::infeasible_model, "grid needs k >= 1 points per axis");
      // Capacity k^dim, computed only far enough to compare against m.
      std::size_t capacity = 1;
      for (std::size_t c = 0; c < model.dim && capacity < m; ++c) {
        if (capacity > std::numeric_limits<std::size_t>::max() / model.k) {
          capacity = std::numeric_limits<std::size_t>::max();
          break;
        }
        capacity *= model.k;
      }
      if (capacity < m) {
        fail(errc::infeasible_model, "grid holds " + std::to_string(capacity) + " points, " +
                                         std::to_string(m) + " requested");
      }
      const bool jitter = model.kind == SampleModel::Kind::jittered_grid;
      if (jitter && model.sigma < 0.0) fail(errc::infeasible_model, "sigma must be >= 0");
      for (std::size_t p = 0; p < m; ++p) {
        std::vector<double> coords(model.dim);
        std::size_t rest = p;
        for (std::size_t c = model.dim; c-- > 0;) {
          coords[c] = static_cast<double>(rest % model.k);
          rest /= model.k;
        }
        if (jitter) {
          for (auto& v : coords) v += rng.uniform(-model.sigma, model.sigma);
        }
        cloud.points.push_back(std::move(coords));
      }
      return cloud;
    }
  }
  fail(errc::infeasible_model, "unknown sample model");
}

RigidMotion random_rigid_motion(std::size_t dim, std::uint64_t seed) {
  if (dim < 1) fail(errc::infeasible_model, "dimension must be >= 1");
  Rng rng(seed);

  std::vector<std::vector<double>> q;
  for (;;) {
    q.assign(dim, std::vector<double>(dim, 0.0));
    for (auto& row : q) {
      for (auto& v : row) v = rng.gaussian();
    }
    // Modified Gram-Schmidt over columns.
    bool degenerate = false;
    for (std::size_t c = 0; c < dim && !degenerate; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        double dot = 0.0;
        for (std::size_t r = 0; r < dim; ++r) dot += q[r][c] * q[r][p];
        for (std::size_t r = 0; r < dim; ++r) q[r][c] -= dot * q[r][p];
      }
      double norm2 = 0.0;
      for (std::size_t r = 0; r < dim; ++r) norm2 += q[r][c] * q[r][c];
      if (norm2 < 1e-16) {
        degenerate = true;
        break;
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t r = 0; r < dim; ++r) q[r][c] *= inv;
    }
    if (!degenerate) break;
  }

  RigidMotion motion;
  motion.rotation = std::move(q);
  motion.translation.resize(dim);
  for (auto& t : motion.translation) t = rng.uniform(-1.0, 1.0);
  return motion;
}

Bijection random_bijection(std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  Bijection f = Bijection::identity(m);
  for (std::size_t i = m; i-- > 1;) {
    std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(f.forward[i], f.forward[j]);
  }
  return f;
}

PointCloud apply(const RigidMotion& motion, const PointCloud& cloud) {
  const std::size_t dim = cloud.dim();
  if (motion.rotation.size() != dim) {
    fail(errc::dimension_mismatch, "motion acts on R^" + std::to_string(motion.rotation.size()) +
                                       ", cloud lives in R^" + std::to_string(dim));
  }
  const std::size_t m = cloud.size();
  Bijection relabel = motion.relabeling;
  if (relabel.size() == 0) relabel = Bijection::identity(m);
  if (relabel.size() != m) {
    fail(errc::size_mismatch, "relabeling size does not match the cloud");
  }
  relabel.validate();

  PointCloud out;
  out.norm = cloud.norm;
  out.points.assign(m, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double>& y = out.points[relabel(i)];
    for (std::size_t r = 0; r < dim; ++r) {
      double acc = motion.translation[r];
      for (std::size_t c = 0; c < dim; ++c) acc += motion.rotation[r][c] * cloud.points[i][c];
      y[r] = acc;
    }
  }
  return out;
}

}  // namespace metric_graphs
