#pragma once

// Hand-rolled random inputs for the property tests.

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include "omstretch/om_core.hpp"

namespace gen {

using Rng = std::mt19937_64;

/// Uniform points in [-1, 1]^d; in general position with probability one.
inline omstretch::PointConfiguration generic(int n, int d, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    Eigen::MatrixXd coords(d, n);
    for (Eigen::Index k = 0; k < coords.size(); ++k) coords.data()[k] = u(rng);
    omstretch::PointConfiguration config(coords);
    if (config.spans()) return config;
  }
}

/// Points on a small integer grid, so collinearities are common. With
/// `distinct` false, coincident points are allowed too.
inline omstretch::PointConfiguration lattice(int n, int d, Rng& rng, int side = 3, bool distinct_points = true) {
  if (distinct_points && std::pow(side, d) < n) throw std::invalid_argument("grid too small for distinct points");
  std::uniform_int_distribution<int> u(0, side - 1);
  while (true) {
    Eigen::MatrixXd coords(d, n);
    for (Eigen::Index k = 0; k < coords.size(); ++k) coords.data()[k] = u(rng);
    bool distinct = true;
    for (int a = 0; a < n && distinct && distinct_points; ++a) {
      for (int b = a + 1; b < n && distinct; ++b) distinct = coords.col(a) != coords.col(b);
    }
    omstretch::PointConfiguration config(coords);
    if (distinct && config.spans()) return config;
  }
}

/// A random invertible affine map applied to every point.
inline omstretch::PointConfiguration affine_image(const omstretch::PointConfiguration& config, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int d = config.d();
  Eigen::MatrixXd a(d, d);
  do {
    for (Eigen::Index k = 0; k < a.size(); ++k) a.data()[k] = u(rng);
  } while (std::abs(a.determinant()) < 0.2);
  Eigen::VectorXd shift(d);
  for (int k = 0; k < d; ++k) shift(k) = 3.0 * u(rng);
  Eigen::MatrixXd image = a * config.coordinates();
  image.colwise() += shift;
  return omstretch::PointConfiguration(image);
}

inline std::vector<int> permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace gen
