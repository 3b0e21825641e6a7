#include "omstretch/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "omstretch/errors.hpp"
#include "omstretch/linalg.hpp"

namespace omstretch {

namespace {

constexpr double kAntipodalTolerance = 1e-10;

std::vector<Eigen::VectorXd> raw_positions(const EmbeddedSphere& s) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(s.positions().size());
  for (const FacePoint& p : s.positions()) out.push_back(p.coords());
  return out;
}

// Vertices integrated explicitly; their antipodes are mirrored.
std::vector<int> representatives(const CircuitGraph& g) {
  std::vector<int> reps;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.antipode(v) < 0) throw ArgumentError("vertex " + g.vertices()[v].to_string() + " has no antipode");
    if (g.vertices()[v].orientation == Sign::kPositive) reps.push_back(v);
  }
  return reps;
}

struct Evaluation {
  std::vector<Eigen::VectorXd> velocities;
  double curv_max = 0.0;
  double curv_mean = 0.0;
  double vel_max = 0.0;
};

Evaluation evaluate(const CircuitGraph& g, const std::vector<int>& reps, const std::vector<Eigen::VectorXd>& x,
                    bool with_curvature) {
  Evaluation e;
  e.velocities.assign(x.size(), Eigen::VectorXd());
  double curv_sum = 0.0;
  for (int v : reps) {
    Eigen::VectorXd vel = Eigen::VectorXd::Zero(x[v].size());
    const Eigen::VectorXd& center = x[v];
    const ElementSet support = g.vertices()[v].circuit.support();
    double curv = 0.0;
    for (const auto& [left, right] : g.opposite_pairs(v)) {
      const double eta = pair_curvature(center, x[left], x[right]);
      curv += eta;
      vel += eta * support_projection(support, x[left] + x[right] - 2.0 * center);
    }
    e.vel_max = std::max(e.vel_max, vel.norm());
    e.velocities[g.antipode(v)] = -vel;
    e.velocities[v] = std::move(vel);
    if (with_curvature) {
      e.curv_max = std::max(e.curv_max, curv);
      curv_sum += curv;
    }
  }
  if (!reps.empty()) e.curv_mean = curv_sum / static_cast<double>(reps.size());
  return e;
}

std::vector<Eigen::VectorXd> advance(const std::vector<Eigen::VectorXd>& x, const std::vector<Eigen::VectorXd>& v,
                                     double h) {
  std::vector<Eigen::VectorXd> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + h * v[k];
  return out;
}

}  // namespace

EmbeddedSphere::EmbeddedSphere(OrientedMatroid matroid, CircuitGraph graph, std::vector<FacePoint> positions)
    : matroid_(std::move(matroid)), graph_(std::move(graph)), positions_(std::move(positions)) {
  if (static_cast<int>(positions_.size()) != graph_.vertex_count()) {
    throw ArgumentError("embedding needs one position per circuit-graph vertex");
  }
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const SignedCircuitVertex& label = graph_.vertices()[v];
    if (!matroid_.contains(label.circuit)) {
      throw ArgumentError("graph vertex " + label.to_string() + " is not a circuit of the matroid");
    }
    const FacePoint& p = positions_[v];
    if (p.n() != matroid_.n()) throw ArgumentError("position has the wrong ambient dimension");
    if (!in_relative_interior(p.coords(), label.signs())) {
      throw DomainError("position of " + label.to_string() + " is outside its face");
    }
    const int w = graph_.antipode(v);
    if (w >= 0 && (p.coords() + positions_[w].coords()).norm() > kAntipodalTolerance) {
      throw DomainError("positions of " + label.to_string() + " and its antipode are not opposite");
    }
  }
}

EmbeddedSphere EmbeddedSphere::natural(const RadonComplex& complex) {
  std::vector<FacePoint> positions;
  for (const Eigen::VectorXd& p : complex.positions) positions.push_back(FacePoint::on_gamma(p));
  return EmbeddedSphere(complex.matroid, complex.graph, std::move(positions));
}

EmbeddedSphere EmbeddedSphere::at_barycenters(OrientedMatroid matroid, CircuitGraph graph) {
  const AmbientSpace space(matroid.n());
  std::vector<FacePoint> positions;
  for (const SignedCircuitVertex& v : graph.vertices()) positions.push_back(barycenter(v, space));
  return EmbeddedSphere(std::move(matroid), std::move(graph), std::move(positions));
}

EmbeddedSphere EmbeddedSphere::with_positions(std::vector<FacePoint> positions) const {
  return EmbeddedSphere(matroid_, graph_, std::move(positions));
}

Eigen::MatrixXd EmbeddedSphere::position_matrix() const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(positions_.size()), n());
  for (std::size_t v = 0; v < positions_.size(); ++v) m.row(static_cast<Eigen::Index>(v)) = positions_[v].coords();
  return m;
}

void FlowParams::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(step)) throw ArgumentError("flow step must be positive");
  if (!positive(t_max)) throw ArgumentError("t_max must be positive");
  if (!positive(tol_curv) || !positive(tol_fixed)) throw ArgumentError("flow tolerances must be positive");
}

std::string to_string(FlowOutcome outcome) {
  switch (outcome) {
    case FlowOutcome::kConvergedFlat: return "converged-flat";
    case FlowOutcome::kStalled: return "stalled";
    case FlowOutcome::kFaceExit: return "face-exit";
    case FlowOutcome::kTMaxReached: return "t_max-reached";
  }
  return "unknown";
}

std::string to_string(Scheme scheme) { return scheme == Scheme::kRk4 ? "rk4" : "euler"; }

double pair_curvature(const Eigen::VectorXd& center, const Eigen::VectorXd& left, const Eigen::VectorXd& right) {
  const double norm = center.norm();
  if (norm < kSignTolerance) throw DegenerateError("curvature at a zero position");
  const Eigen::VectorXd axis = center / norm;
  Eigen::VectorXd w = left - left.dot(axis) * axis;
  Eigen::VectorXd w2 = right - right.dot(axis) * axis;
  if (w.norm() < kSignTolerance || w2.norm() < kSignTolerance) {
    throw DegenerateError("neighbour collinear with its centre vertex through the origin");
  }
  w.normalize();
  w2.normalize();
  // sqrt(det Gram(w, w2)) evaluated as the part of w2 orthogonal to w.
  return (w2 - w.dot(w2) * w).norm();
}

Curvature curvature_at(const CircuitGraph& g, std::span<const Eigen::VectorXd> positions, int v) {
  Curvature c;
  for (const auto& [left, right] : g.opposite_pairs(v)) {
    c.terms.push_back(pair_curvature(positions[v], positions[left], positions[right]));
    c.total += c.terms.back();
  }
  return c;
}

Eigen::VectorXd velocity_at(const CircuitGraph& g, std::span<const Eigen::VectorXd> positions, int v) {
  const ElementSet support = g.vertices()[v].circuit.support();
  Eigen::VectorXd vel = Eigen::VectorXd::Zero(positions[v].size());
  for (const auto& [left, right] : g.opposite_pairs(v)) {
    const double eta = pair_curvature(positions[v], positions[left], positions[right]);
    vel += eta * support_projection(support, positions[left] + positions[right] - 2.0 * positions[v]);
  }
  return vel;
}

Curvature local_curvature(const EmbeddedSphere& s, int v) {
  if (v < 0 || v >= s.graph().vertex_count()) throw ArgumentError("vertex index out of range");
  return curvature_at(s.graph(), raw_positions(s), v);
}

Curvature local_curvature(const EmbeddedSphere& s, const SignedCircuitVertex& v) {
  const auto index = s.graph().index_of(v);
  if (!index) throw ArgumentError("vertex " + v.to_string() + " is not in the sphere");
  return local_curvature(s, *index);
}

Eigen::VectorXd velocity(const EmbeddedSphere& s, int v) {
  if (v < 0 || v >= s.graph().vertex_count()) throw ArgumentError("vertex index out of range");
  return velocity_at(s.graph(), raw_positions(s), v);
}

Eigen::VectorXd velocity(const EmbeddedSphere& s, const SignedCircuitVertex& v) {
  const auto index = s.graph().index_of(v);
  if (!index) throw ArgumentError("vertex " + v.to_string() + " is not in the sphere");
  return velocity(s, *index);
}

FlowResult integrate(const EmbeddedSphere& s, const FlowParams& params) {
  params.validate();
  const CircuitGraph& g = s.graph();
  const std::vector<int> reps = representatives(g);
  std::vector<Eigen::VectorXd> x = raw_positions(s);

  FlowTrace trace;
  Evaluation current = evaluate(g, reps, x, true);
  trace.samples.push_back({0.0, current.curv_max, current.curv_mean, current.vel_max});

  auto classify = [&](const Evaluation& e) -> std::optional<FlowOutcome> {
    if (e.curv_max < params.tol_curv && e.vel_max < params.tol_fixed) return FlowOutcome::kConvergedFlat;
    if (e.vel_max < params.tol_fixed) return FlowOutcome::kStalled;
    return std::nullopt;
  };

  std::optional<FlowOutcome> outcome = classify(current);
  const double h = params.step;
  for (long step = 1; !outcome; ++step) {
    const double t = static_cast<double>(step) * h;
    if (t > params.t_max * (1.0 + 1e-12)) {
      outcome = FlowOutcome::kTMaxReached;
      break;
    }

    std::vector<Eigen::VectorXd> next;
    if (params.scheme == Scheme::kExplicitEuler) {
      next = advance(x, current.velocities, h);
    } else {
      const auto& k1 = current.velocities;
      const auto k2 = evaluate(g, reps, advance(x, k1, h / 2), false).velocities;
      const auto k3 = evaluate(g, reps, advance(x, k2, h / 2), false).velocities;
      const auto k4 = evaluate(g, reps, advance(x, k3, h), false).velocities;
      next = x;
      for (std::size_t k = 0; k < x.size(); ++k) next[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }

    bool left_face = false;
    for (int v : reps) {
      // Renormalising a nearly radial step amplifies rounding in sum(x); re-centre first.
      next[v] = support_projection(g.vertices()[v].circuit.support(), next[v]);
      const double l1 = next[v].lpNorm<1>();
      if (!std::isfinite(l1) || l1 < kMembershipTolerance) {
        throw IntegrationError("position norm collapsed at t = " + std::to_string(t));
      }
      next[v] *= 2.0 / l1;
      next[g.antipode(v)] = -next[v];
      if (sign_vector(next[v], kSignTolerance) != g.vertices()[v].signs()) left_face = true;
    }
    if (left_face) {
      outcome = FlowOutcome::kFaceExit;
      break;
    }
    for (std::size_t a = 0; a < next.size(); ++a) {
      for (std::size_t b = a + 1; b < next.size(); ++b) {
        if ((next[a] - next[b]).norm() < kCollisionDistance) {
          throw IntegrationError("vertices " + g.vertices()[a].to_string() + " and " + g.vertices()[b].to_string() +
                                 " collided at t = " + std::to_string(t));
        }
      }
    }

    x = std::move(next);
    const double previous_max = current.curv_max;
    current = evaluate(g, reps, x, true);
    if (current.curv_max > previous_max) ++trace.curvature_increases;
    trace.samples.push_back({t, current.curv_max, current.curv_mean, current.vel_max});
    outcome = classify(current);
  }
  trace.outcome = *outcome;

  std::vector<FacePoint> final_positions;
  final_positions.reserve(x.size());
  for (const Eigen::VectorXd& p : x) final_positions.push_back(FacePoint::on_gamma(p));
  return FlowResult{s.with_positions(std::move(final_positions)), std::move(trace)};
}

int embedding_rank(const EmbeddedSphere& s, double flat_tolerance) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s.position_matrix());
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > flat_tolerance * sv(0)).count());
}

PointConfiguration recover_configuration(const EmbeddedSphere& s, double flat_tolerance) {
  const int n = s.n();
  const int d = s.matroid().d();
  const int expected = n - d - 1;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s.position_matrix(), Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const int rank = static_cast<int>((sv.array() > flat_tolerance * sv(0)).count());
  if (rank != expected) {
    throw PreconditionError("embedding is not flat: positions span " + std::to_string(rank) +
                            " dimensions, expected " + std::to_string(expected));
  }
  // Coordinates = basis of the orthogonal complement of span(positions) + 1 inside R^n.
  Eigen::MatrixXd spanning(n, expected + 1);
  spanning.leftCols(expected) = svd.matrixV().leftCols(expected);
  spanning.col(expected) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  const Eigen::MatrixXd complement = kernel_basis(spanning.transpose());
  if (complement.cols() != d) throw std::logic_error("complement of a flat embedding has the wrong dimension");
  return PointConfiguration(Eigen::MatrixXd(complement.transpose()));
}

DecayFit curvature_decay_stats(const FlowTrace& trace) {
  std::vector<FlowSample> positive;
  for (const FlowSample& s : trace.samples) {
    if (s.curv_max > 0.0) positive.push_back(s);
  }
  if (positive.size() < 10) throw ArgumentError("decay fit needs at least 10 samples with positive curvature");
  const double half = 0.5 * positive.front().curv_max;
  auto start = std::find_if(positive.begin(), positive.end(), [&](const FlowSample& s) { return s.curv_max < half; });
  const std::vector<FlowSample> window(start, positive.end());
  if (window.size() < 3) throw ArgumentError("curvature never settles below half its initial value");

  const double count = static_cast<double>(window.size());
  double mean_t = 0.0;
  double mean_y = 0.0;
  for (const FlowSample& s : window) {
    mean_t += s.t;
    mean_y += std::log(s.curv_max);
  }
  mean_t /= count;
  mean_y /= count;
  double stt = 0.0;
  double sty = 0.0;
  double syy = 0.0;
  for (const FlowSample& s : window) {
    const double dt = s.t - mean_t;
    const double dy = std::log(s.curv_max) - mean_y;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  if (stt == 0.0) throw ArgumentError("decay fit needs distinct sample times");
  DecayFit fit;
  fit.rate = sty / stt;
  fit.r2 = syy == 0.0 ? 1.0 : (sty * sty) / (stt * syy);
  return fit;
}

std::optional<EmbeddedSphere> perturb_within_faces(const EmbeddedSphere& s, double delta, std::mt19937_64& rng) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw ArgumentError("perturbation size must be non-negative");
  if (delta == 0.0) return s;
  const CircuitGraph& g = s.graph();
  std::vector<Eigen::VectorXd> x = raw_positions(s);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (int v : representatives(g)) {
    const SignedSet signs = g.vertices()[v].signs();
    Eigen::VectorXd u = Eigen::VectorXd::Zero(s.n());
    if (delta > 0.0) {
      for (int k : signs.support().elements()) u(k - 1) = delta * uniform(rng);
    }
    for (ElementSet side : {signs.pos, signs.neg}) {
      if (side.empty()) continue;
      double mean = 0.0;
      for (int k : side.elements()) mean += u(k - 1);
      mean /= side.size();
      for (int k : side.elements()) u(k - 1) -= mean;
    }
    const Eigen::VectorXd moved = x[v] + u;
    if (sign_vector(moved, kSignTolerance) != signs) return std::nullopt;
    x[v] = project_to_gamma(moved).coords();
    x[g.antipode(v)] = -x[v];
  }
  std::vector<FacePoint> positions;
  for (const Eigen::VectorXd& p : x) positions.push_back(FacePoint::on_gamma(p));
  return s.with_positions(std::move(positions));
}

}  // namespace omstretch
