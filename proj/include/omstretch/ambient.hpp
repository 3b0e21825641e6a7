#pragma once

#include <Eigen/Dense>
#include <string>

#include "omstretch/element_set.hpp"
#include "omstretch/om_core.hpp"

namespace omstretch {

/// Tolerance for the two membership equations sum(x) = 0 and sum|x| = 2.
inline constexpr double kMembershipTolerance = 1e-8;

/**
 * The polytope Gamma = O_n n 1^perp inside R^n: points with sum|x_i| = 2 and
 * sum x_i = 0. Its faces are labelled by sign patterns and never stored.
 */
class AmbientSpace {
 public:
  explicit AmbientSpace(int n);

  int n() const { return n_; }
  bool contains(const Eigen::VectorXd& x) const;

 private:
  int n_;
};

/// A point of Gamma. Construction checks both membership equations.
class FacePoint {
 public:
  /// Throws DomainError when x is not on Gamma within kMembershipTolerance.
  static FacePoint on_gamma(Eigen::VectorXd x);

  const Eigen::VectorXd& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()); }
  /// Coordinate of the 1-based element i.
  double operator[](int i) const { return coords_(i - 1); }
  FacePoint operator-() const { return FacePoint(-coords_); }

 private:
  explicit FacePoint(Eigen::VectorXd x) : coords_(std::move(x)) {}
  Eigen::VectorXd coords_;
};

/// Face of Gamma identified by the sign pattern of its relative interior.
using FaceLabel = SignedSet;

/// True when both membership equations hold within kMembershipTolerance.
bool on_gamma(const Eigen::VectorXd& x);

/// e_i - e_j.
FacePoint vertex(const AmbientSpace& space, int i, int j);

/// Barycentre of the face of circuit c, for orientation s relative to the canonical form.
FacePoint barycenter(const Circuit& c, Sign s, const AmbientSpace& space);
FacePoint barycenter(const SignedCircuitVertex& v, const AmbientSpace& space);

FaceLabel face_of(const FacePoint& p);
/// Checks membership first; throws DomainError off Gamma.
FaceLabel face_of(const Eigen::VectorXd& x);

/// The point lies in the relative interior of the face `label`.
bool in_relative_interior(const Eigen::VectorXd& x, const FaceLabel& label);

/// 2x / sum|x_i|. Requires sum x_i = 0; throws DegenerateError when x is (near) zero.
FacePoint project_to_gamma(const Eigen::VectorXd& x);

/// Orthogonal projection onto span{e_ij : i, j in s}. Requires |s| >= 2.
Eigen::VectorXd support_projection(ElementSet s, const Eigen::VectorXd& x);

}  // namespace omstretch
