#pragma once

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "omstretch/ambient.hpp"
#include "omstretch/om_core.hpp"
#include "omstretch/radon_complex.hpp"

namespace omstretch {

/// Relative singular-value threshold deciding the dimension of a flat embedding.
inline constexpr double kFlatTolerance = 1e-6;
/// Positions closer than this are treated as a collision.
inline constexpr double kCollisionDistance = 1e-10;

/**
 * A circuit-graph sphere embedded in Gamma: one point per signed circuit,
 * each in the relative interior of its own face, with position(-v) = -position(v).
 */
class EmbeddedSphere {
 public:
  /// Throws DomainError when a position is off Gamma, outside its face, or not antipodal.
  EmbeddedSphere(OrientedMatroid matroid, CircuitGraph graph, std::vector<FacePoint> positions);

  /// The flat embedding at the natural coordinates of a geometric Radon complex.
  static EmbeddedSphere natural(const RadonComplex& complex);
  /// Every vertex at the barycentre of its face.
  static EmbeddedSphere at_barycenters(OrientedMatroid matroid, CircuitGraph graph);

  const OrientedMatroid& matroid() const { return matroid_; }
  const CircuitGraph& graph() const { return graph_; }
  const std::vector<FacePoint>& positions() const { return positions_; }
  const FacePoint& position(int v) const { return positions_.at(v); }
  int n() const { return matroid_.n(); }

  EmbeddedSphere with_positions(std::vector<FacePoint> positions) const;
  /// One row per graph vertex.
  Eigen::MatrixXd position_matrix() const;

 private:
  OrientedMatroid matroid_;
  CircuitGraph graph_;
  std::vector<FacePoint> positions_;
};

enum class Scheme { kExplicitEuler, kRk4 };

struct FlowParams {
  double step = 0.01;
  double t_max = 200.0;
  double tol_curv = 1e-8;
  double tol_fixed = 1e-10;
  Scheme scheme = Scheme::kRk4;

  /// Throws ArgumentError unless every numeric field is positive.
  void validate() const;
};

enum class FlowOutcome { kConvergedFlat, kStalled, kFaceExit, kTMaxReached };

std::string to_string(FlowOutcome outcome);
std::string to_string(Scheme scheme);

struct FlowSample {
  double t = 0.0;
  double curv_max = 0.0;
  double curv_mean = 0.0;
  double vel_max = 0.0;
};

struct FlowTrace {
  std::vector<FlowSample> samples;
  FlowOutcome outcome = FlowOutcome::kTMaxReached;
  /// Steps at which the maximal curvature went up.
  int curvature_increases = 0;
};

/// Curvature at a vertex: one term per opposite pair, in opposite_pairs order.
struct Curvature {
  double total = 0.0;
  std::vector<double> terms;
};

Curvature local_curvature(const EmbeddedSphere& s, int v);
Curvature local_curvature(const EmbeddedSphere& s, const SignedCircuitVertex& v);

Eigen::VectorXd velocity(const EmbeddedSphere& s, int v);
Eigen::VectorXd velocity(const EmbeddedSphere& s, const SignedCircuitVertex& v);

/// Curvature and velocity evaluated on raw coordinates (used between renormalisations).
double pair_curvature(const Eigen::VectorXd& center, const Eigen::VectorXd& left, const Eigen::VectorXd& right);
Curvature curvature_at(const CircuitGraph& g, std::span<const Eigen::VectorXd> positions, int v);
Eigen::VectorXd velocity_at(const CircuitGraph& g, std::span<const Eigen::VectorXd> positions, int v);

struct FlowResult {
  EmbeddedSphere sphere;
  FlowTrace trace;
};

/**
 * Integrate the curvature flow until the embedding is flat, the velocity
 * vanishes, a vertex leaves its face, or t_max is reached. Throws
 * IntegrationError on norm collapse or vertex collision.
 */
FlowResult integrate(const EmbeddedSphere& s, const FlowParams& params);

/// Configuration whose affine dependences are the span of the (flat) positions.
PointConfiguration recover_configuration(const EmbeddedSphere& s, double flat_tolerance = kFlatTolerance);

/// Dimension of the span of the positions under the relative singular-value threshold.
int embedding_rank(const EmbeddedSphere& s, double flat_tolerance = kFlatTolerance);

struct DecayFit {
  double rate = 0.0;
  double r2 = 0.0;
};

/// Least-squares fit of log(curv_max) against t after curv_max halves.
DecayFit curvature_decay_stats(const FlowTrace& trace);

/**
 * Displace every vertex by a uniform draw in [-delta, delta] per support
 * coordinate, projected onto the tangent space of its face; antipodes are
 * mirrored. Returns nullopt when some displaced vertex leaves its face.
 */
std::optional<EmbeddedSphere> perturb_within_faces(const EmbeddedSphere& s, double delta, std::mt19937_64& rng);

}  // namespace omstretch
