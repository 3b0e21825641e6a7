#pragma once

#include <cmath>
#include <vector>

#include "omstretch/om_core.hpp"

namespace fixtures {

inline omstretch::PointConfiguration square() {
  return omstretch::PointConfiguration(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

inline omstretch::PointConfiguration regular_pentagon() {
  std::vector<std::vector<double>> pts;
  for (int k = 0; k < 5; ++k) {
    const double a = 2.0 * M_PI * k / 5.0 + M_PI / 2.0;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  return omstretch::PointConfiguration(2, pts);
}

/// A convex hexagon with no parallel sides or concurrent diagonals.
inline omstretch::PointConfiguration hexagon() {
  const double offsets[6] = {0.0, 0.1, -0.05, 0.2, 0.0, 0.13};
  std::vector<std::vector<double>> pts;
  for (int k = 0; k < 6; ++k) {
    const double a = k * M_PI / 3.0 + offsets[k];
    pts.push_back({std::cos(a), 1.3 * std::sin(a)});
  }
  return omstretch::PointConfiguration(2, pts);
}

}  // namespace fixtures
