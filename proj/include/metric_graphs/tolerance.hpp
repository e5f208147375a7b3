#pragma once

#include <cmath>

namespace metric_graphs {

// Every "these two distances are equal" decision in the library routes through
// one of these configs. Absolute mode compares |a-b| <= eq_tol directly;
// relative mode scales the tolerance by the diameter of the space at hand.
struct ToleranceConfig {
  enum class Scale { absolute, relative_to_diameter };

  double eq_tol = 1e-9;
  Scale scale = Scale::absolute;

  double effective(double diameter) const {
    return scale == Scale::absolute ? eq_tol : eq_tol * diameter;
  }
};

inline bool nearly_equal(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace metric_graphs
