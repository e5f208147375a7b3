#include "metric_graphs/point_cloud.hpp"

#include <algorithm>
#include <cmath>

#include "metric_graphs/errors.hpp"

namespace metric_graphs {

const char* norm_name(Norm norm) {
  switch (norm) {
    case Norm::l1: return "l1";
    case Norm::l2: return "l2";
    case Norm::linf: return "linf";
  }
  return "?";
}

Norm norm_from_name(const std::string& name) {
  if (name == "l1") return Norm::l1;
  if (name == "l2") return Norm::l2;
  if (name == "linf") return Norm::linf;
  fail(errc::parse, "unknown norm '" + name + "' (expected l1, l2 or linf)");
}

double point_distance(const std::vector<double>& a, const std::vector<double>& b, Norm norm) {
  double acc = 0.0;
  switch (norm) {
    case Norm::l1:
      for (std::size_t c = 0; c < a.size(); ++c) acc += std::fabs(a[c] - b[c]);
      return acc;
    case Norm::l2:
      for (std::size_t c = 0; c < a.size(); ++c) {
        double d = a[c] - b[c];
        acc += d * d;
      }
      return std::sqrt(acc);
    case Norm::linf:
      for (std::size_t c = 0; c < a.size(); ++c) acc = std::max(acc, std::fabs(a[c] - b[c]));
      return acc;
  }
  return acc;
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::parse: return "parse";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::duplicate_point: return "duplicate_point";
    case errc::not_symmetric: return "not_symmetric";
    case errc::negative_distance: return "negative_distance";
    case errc::zero_off_diagonal: return "zero_off_diagonal";
    case errc::nonzero_diagonal: return "nonzero_diagonal";
    case errc::triangle_violation: return "triangle_violation";
    case errc::degenerate_distance_set: return "degenerate_distance_set";
    case errc::not_connected: return "not_connected";
    case errc::size_mismatch: return "size_mismatch";
    case errc::norm_mismatch: return "norm_mismatch";
    case errc::missing_provenance: return "missing_provenance";
    case errc::too_large: return "too_large";
    case errc::exhausted_attempts: return "exhausted_attempts";
    case errc::infeasible_model: return "infeasible_model";
    case errc::internal_invariant: return "internal_invariant";
  }
  return "?";
}

}  // namespace metric_graphs
