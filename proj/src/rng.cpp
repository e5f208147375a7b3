#include "metric_graphs/rng.hpp"

#include <cmath>
#include <limits>

#include "metric_graphs/errors.hpp"
#include "metric_graphs/point_cloud.hpp"

namespace metric_graphs {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(errc::internal_invariant, "Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  for (;;) {
    std::uint64_t x = next_u64();
    if (x < limit) return x % n;
  }
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

std::vector<double> sample_in_ball(Rng& rng, std::size_t dim, double radius, Norm norm) {
  std::vector<double> out(dim, 0.0);
  switch (norm) {
    case Norm::linf:
      for (auto& c : out) c = rng.uniform(-radius, radius);
      return out;
    case Norm::l2: {
      // Gaussian direction scaled to a U^(1/N) radius.
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (auto& c : out) {
          c = rng.gaussian();
          norm2 += c * c;
        }
      } while (norm2 == 0.0);
      const double scale = radius * std::pow(rng.uniform01(), 1.0 / double(dim)) / std::sqrt(norm2);
      for (auto& c : out) c *= scale;
      return out;
    }
    case Norm::l1: {
      // Laplace coordinates plus one exponential in the normalizer give a
      // uniform draw from the L1 ball (Barthe-Guedon-Mendelson-Naor).
      double sum = 0.0;
      for (auto& c : out) {
        const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
        c = sign * rng.exponential();
        sum += std::fabs(c);
      }
      const double denom = sum + rng.exponential();
      if (denom == 0.0) return out;
      for (auto& c : out) c *= radius / denom;
      return out;
    }
  }
  return out;
}

}  // namespace metric_graphs
