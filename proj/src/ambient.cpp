#include "omstretch/ambient.hpp"

#include <algorithm>
#include <cmath>

#include "omstretch/errors.hpp"
#include "omstretch/linalg.hpp"

namespace omstretch {

AmbientSpace::AmbientSpace(int n) : n_(n) {
  if (n < 3 || n > kMaxElements) throw ArgumentError("ambient dimension must lie in 3.." + std::to_string(kMaxElements));
}

bool AmbientSpace::contains(const Eigen::VectorXd& x) const { return x.size() == n_ && on_gamma(x); }

bool on_gamma(const Eigen::VectorXd& x) {
  return std::abs(x.sum()) <= kMembershipTolerance && std::abs(x.lpNorm<1>() - 2.0) <= kMembershipTolerance;
}

FacePoint FacePoint::on_gamma(Eigen::VectorXd x) {
  if (!omstretch::on_gamma(x)) {
    throw DomainError("point is not on Gamma: sum = " + std::to_string(x.sum()) +
                      ", l1 norm = " + std::to_string(x.lpNorm<1>()));
  }
  return FacePoint(std::move(x));
}

FacePoint vertex(const AmbientSpace& space, int i, int j) {
  if (i == j) throw ArgumentError("vertex e_ij needs i != j");
  if (i < 1 || j < 1 || i > space.n() || j > space.n()) throw ArgumentError("vertex label outside ground set");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(space.n());
  x(i - 1) = 1.0;
  x(j - 1) = -1.0;
  return FacePoint::on_gamma(std::move(x));
}

FacePoint barycenter(const Circuit& c, Sign s, const AmbientSpace& space) {
  const SignedSet signs = c.oriented(s);
  if (signs.pos.empty() || signs.neg.empty()) {
    throw ArgumentError("circuit " + c.to_string() + " has an empty side and no barycentre on Gamma");
  }
  if (!c.support().is_subset_of(ElementSet::range(space.n()))) {
    throw ArgumentError("circuit " + c.to_string() + " outside the ambient ground set");
  }
  Eigen::VectorXd x = Eigen::VectorXd::Zero(space.n());
  const double lambda = 1.0 / signs.pos.size();
  const double mu = 1.0 / signs.neg.size();
  for (int a : signs.pos.elements()) x(a - 1) = lambda;
  for (int b : signs.neg.elements()) x(b - 1) = -mu;
  return FacePoint::on_gamma(std::move(x));
}

FacePoint barycenter(const SignedCircuitVertex& v, const AmbientSpace& space) {
  return barycenter(v.circuit, v.orientation, space);
}

FaceLabel face_of(const FacePoint& p) { return sign_vector(p.coords(), kSignTolerance); }

FaceLabel face_of(const Eigen::VectorXd& x) { return face_of(FacePoint::on_gamma(x)); }

bool in_relative_interior(const Eigen::VectorXd& x, const FaceLabel& label) {
  return on_gamma(x) && sign_vector(x, kSignTolerance) == label;
}

FacePoint project_to_gamma(const Eigen::VectorXd& x) {
  const double l1 = x.lpNorm<1>();
  if (l1 < kMembershipTolerance) throw DegenerateError("cannot project a (near) zero vector onto Gamma");
  if (std::abs(x.sum()) > kMembershipTolerance * std::max(1.0, l1)) {
    throw DomainError("vector with coordinate sum " + std::to_string(x.sum()) + " is not in 1^perp");
  }
  return FacePoint::on_gamma(2.0 * x / l1);
}

Eigen::VectorXd support_projection(ElementSet s, const Eigen::VectorXd& x) {
  if (s.size() < 2) throw ArgumentError("support projection needs at least two elements");
  if (s.max() > x.size()) throw ArgumentError("support " + s.to_string() + " outside the vector's range");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
  double mean = 0.0;
  for (int k : s.elements()) mean += x(k - 1);
  mean /= s.size();
  for (int k : s.elements()) y(k - 1) = x(k - 1) - mean;
  return y;
}

}  // namespace omstretch
