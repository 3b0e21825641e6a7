#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "omstretch/errors.hpp"
#include "omstretch/flow.hpp"
#include "oracles.hpp"

using namespace omstretch;
using Catch::Matchers::WithinAbs;

namespace {

EmbeddedSphere perturbed(const PointConfiguration& config, double delta, std::uint64_t seed) {
  const EmbeddedSphere flat = EmbeddedSphere::natural(geometric_radon_complex(config));
  std::mt19937_64 rng(seed);
  auto s = perturb_within_faces(flat, delta, rng);
  REQUIRE(s.has_value());
  return *s;
}

double max_antipodal_defect(const EmbeddedSphere& s) {
  double worst = 0.0;
  for (int v = 0; v < s.graph().vertex_count(); ++v) {
    worst = std::max(worst, (s.position(v).coords() + s.position(s.graph().antipode(v)).coords()).norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("pair curvature matches the cross-product formula in R^3") {
  gen::Rng rng(21);
  std::normal_distribution<double> normal;
  auto draw = [&] { return Eigen::Vector3d(normal(rng), normal(rng), normal(rng)); };
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Vector3d p = draw();
    const Eigen::Vector3d l = draw();
    const Eigen::Vector3d r = draw();
    CHECK_THAT(pair_curvature(p, l, r), WithinAbs(oracle::cross_curvature(p, l, r), 1e-12));
  }
}

TEST_CASE("pair curvature only sees the span of the three vectors") {
  gen::Rng rng(22);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXd m(5, 3);
    for (auto& x : m.reshaped()) x = normal(rng);
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ() * Eigen::MatrixXd::Identity(5, 3);
    const Eigen::Vector3d p(normal(rng), normal(rng), normal(rng));
    const Eigen::Vector3d l(normal(rng), normal(rng), normal(rng));
    const Eigen::Vector3d r(normal(rng), normal(rng), normal(rng));
    CHECK_THAT(pair_curvature(q * p, q * l, q * r), WithinAbs(oracle::cross_curvature(p, l, r), 1e-12));
  }
}

TEST_CASE("coplanar triples have zero curvature; degenerate pairs are errors") {
  Eigen::VectorXd p(4), l(4), r(4);
  p << 1, -1, 0, 0;
  l << 0.5, -1.5, 0.5, 0.5;
  r = 2.0 * p - 0.7 * l;
  CHECK(pair_curvature(p, l, r) < 1e-15);
  CHECK_THROWS_AS(pair_curvature(p, 3.0 * p, r), DegenerateError);
  CHECK_THROWS_AS(pair_curvature(Eigen::VectorXd::Zero(4), l, r), DegenerateError);
}

TEST_CASE("natural embeddings are flat fixed points") {
  gen::Rng rng(23);
  std::vector<PointConfiguration> configs{fixtures::regular_pentagon(), fixtures::hexagon()};
  for (int trial = 0; trial < 5; ++trial) configs.push_back(gen::generic(7, 3, rng));
  for (int trial = 0; trial < 5; ++trial) configs.push_back(gen::lattice(6, 2, rng));
  for (const PointConfiguration& config : configs) {
    const RadonComplex c = geometric_radon_complex(config);
    const EmbeddedSphere s = EmbeddedSphere::natural(c);
    CHECK(embedding_rank(s) == config.n() - config.d() - 1);
    for (int v = 0; v < s.graph().vertex_count(); ++v) {
      CHECK(local_curvature(s, v).total < 1e-10);
      CHECK(velocity(s, v).norm() < 1e-10);
    }
    const FlowResult r = integrate(s, FlowParams{});
    CHECK(r.trace.outcome == FlowOutcome::kConvergedFlat);
    CHECK(r.trace.samples.size() == 1);
    for (int v = 0; v < s.graph().vertex_count(); ++v) {
      CHECK((r.sphere.position(v).coords() - s.position(v).coords()).norm() < 1e-12);
    }
  }
}

TEST_CASE("a displaced pentagon vertex bends its neighbours") {
  const RadonComplex c = geometric_radon_complex(fixtures::regular_pentagon());
  const EmbeddedSphere bary = EmbeddedSphere::at_barycenters(c.matroid, c.graph);
  const CircuitGraph& g = bary.graph();
  const int v = 0;
  const SignedSet label = g.vertices()[v].signs();
  // Move mass from one positive element to the other, staying inside the face.
  const std::vector<int> pos = label.pos.elements();
  Eigen::VectorXd shift = Eigen::VectorXd::Zero(5);
  shift(pos[0] - 1) = 0.05;
  shift(pos[1] - 1) = -0.05;
  std::vector<FacePoint> positions = bary.positions();
  positions[v] = FacePoint::on_gamma(positions[v].coords() + shift);
  positions[g.antipode(v)] = -positions[v];
  const EmbeddedSphere s = bary.with_positions(positions);

  for (int w : g.neighbors(v)) {
    const Curvature k = local_curvature(s, w);
    REQUIRE(k.terms.size() == 1);
    const auto [l, r] = g.opposite_pairs(w)[0];
    CHECK(k.total > 0.0);
    CHECK_THAT(k.total, WithinAbs(pair_curvature(s.position(w).coords(), s.position(l).coords(),
                                                 s.position(r).coords()),
                                  1e-15));
    const Eigen::VectorXd vel = velocity(s, w);
    const ElementSet support = g.vertices()[w].circuit.support();
    CHECK(vel.norm() > 0.0);
    CHECK((oracle::support_projector(support, 5) * vel - vel).norm() < 1e-12);
    CHECK((velocity(s, g.antipode(w)) + vel).norm() < 1e-15);
  }
  CHECK(local_curvature(s, g.vertices()[v]).total >= 0.0);
}

TEST_CASE("velocity is odd under the antipodal map") {
  const EmbeddedSphere s = perturbed(fixtures::hexagon(), 0.05, 3);
  for (int v = 0; v < s.graph().vertex_count(); ++v) {
    CHECK((velocity(s, v) + velocity(s, s.graph().antipode(v))).norm() < 1e-14);
  }
}

TEST_CASE("perturbation stays in faces and keeps antipodes opposite") {
  const EmbeddedSphere flat = EmbeddedSphere::natural(geometric_radon_complex(fixtures::hexagon()));
  std::mt19937_64 rng(1);
  const auto same = perturb_within_faces(flat, 0.0, rng);
  REQUIRE(same.has_value());
  for (int v = 0; v < flat.graph().vertex_count(); ++v) CHECK(same->position(v).coords() == flat.position(v).coords());

  for (int trial = 0; trial < 20; ++trial) {
    const auto s = perturb_within_faces(flat, 0.05, rng);
    REQUIRE(s.has_value());
    CHECK(max_antipodal_defect(*s) < 1e-12);
    CHECK(embedding_rank(*s) > 3);
  }
  int exits = 0;
  for (int trial = 0; trial < 20; ++trial) exits += perturb_within_faces(flat, 2.0, rng).has_value() ? 0 : 1;
  CHECK(exits > 0);
  CHECK_THROWS_AS(perturb_within_faces(flat, -1.0, rng), ArgumentError);
}

TEST_CASE("integration keeps positions on Gamma, antipodal and in their faces") {
  const EmbeddedSphere s = perturbed(fixtures::hexagon(), 0.05, 4);
  for (Scheme scheme : {Scheme::kRk4, Scheme::kExplicitEuler}) {
    FlowParams params;
    params.t_max = 2.0;
    params.scheme = scheme;
    const FlowResult r = integrate(s, params);
    CHECK(r.trace.outcome == FlowOutcome::kTMaxReached);
    CHECK(r.trace.samples.size() == 201);
    for (std::size_t k = 1; k < r.trace.samples.size(); ++k) CHECK(r.trace.samples[k].t > r.trace.samples[k - 1].t);
    CHECK(max_antipodal_defect(r.sphere) < 1e-10);
    for (const FacePoint& p : r.sphere.positions()) CHECK(on_gamma(p.coords()));
  }
}

TEST_CASE("Euler and RK4 agree for small steps") {
  const EmbeddedSphere s = perturbed(fixtures::regular_pentagon(), 0.05, 5);
  FlowParams a;
  a.t_max = 1.0;
  a.step = 1e-3;
  FlowParams b = a;
  b.scheme = Scheme::kExplicitEuler;
  const FlowResult ra = integrate(s, a);
  const FlowResult rb = integrate(s, b);
  double gap = 0.0;
  for (int v = 0; v < s.graph().vertex_count(); ++v) {
    gap = std::max(gap, (ra.sphere.position(v).coords() - rb.sphere.position(v).coords()).norm());
  }
  CHECK(gap < 1e-3);
}

TEST_CASE("pentagon curvature decays under the flow") {
  const EmbeddedSphere s = perturbed(fixtures::regular_pentagon(), 0.05, 6);
  FlowParams params;
  params.t_max = 20.0;
  const FlowResult r = integrate(s, params);
  CHECK(r.trace.samples.back().curv_max < r.trace.samples.front().curv_max);
  CHECK(curvature_decay_stats(r.trace).rate < 0.0);
}

TEST_CASE("an overlong Euler step leaves the face or fails loudly") {
  const EmbeddedSphere s = perturbed(fixtures::hexagon(), 0.05, 7);
  FlowParams params;
  params.scheme = Scheme::kExplicitEuler;
  params.step = 50.0;
  params.t_max = 1000.0;
  try {
    const FlowResult r = integrate(s, params);
    CHECK(r.trace.outcome == FlowOutcome::kFaceExit);
    // The state before the offending step is kept.
    CHECK(r.sphere.positions().size() == s.positions().size());
  } catch (const IntegrationError&) {
    SUCCEED("norm collapse or collision reported");
  }
}

TEST_CASE("flow parameters are validated") {
  FlowParams p;
  p.step = 0.0;
  CHECK_THROWS_AS(p.validate(), ArgumentError);
  p = FlowParams{};
  p.tol_curv = -1.0;
  CHECK_THROWS_AS(p.validate(), ArgumentError);
  CHECK(to_string(FlowOutcome::kConvergedFlat) == "converged-flat");
  CHECK(to_string(FlowOutcome::kTMaxReached) == "t_max-reached");
}

TEST_CASE("recovering configurations from flat embeddings") {
  gen::Rng rng(31);
  std::vector<PointConfiguration> configs{fixtures::square(), fixtures::regular_pentagon(), fixtures::hexagon()};
  for (int trial = 0; trial < 10; ++trial) configs.push_back(gen::generic(5 + trial % 3, 2 + trial % 2, rng));
  for (int trial = 0; trial < 5; ++trial) configs.push_back(gen::lattice(6, 2, rng));
  for (const PointConfiguration& config : configs) {
    const RadonComplex c = geometric_radon_complex(config);
    const PointConfiguration back = recover_configuration(EmbeddedSphere::natural(c));
    CHECK(back.d() == config.d());
    CHECK(circuits_of_points(back) == c.matroid);
    const Eigen::MatrixXd k1 = dependence_space(config);
    const Eigen::MatrixXd k2 = dependence_space(back);
    CHECK((k1 * k1.transpose() - k2 * k2.transpose()).norm() < 1e-9);
  }
  CHECK(circuits_of_points(recover_configuration(EmbeddedSphere::natural(geometric_radon_complex(fixtures::square()))))
            .circuits()[0] == Circuit({1, 4}, {2, 3}));
  CHECK_THROWS_AS(recover_configuration(perturbed(fixtures::hexagon(), 0.05, 8)), PreconditionError);
}

TEST_CASE("decay fit") {
  FlowTrace trace;
  for (int k = 0; k <= 200; ++k) {
    const double t = 0.01 * k;
    trace.samples.push_back({t, std::exp(-3.0 * t), 0.0, 0.0});
  }
  const DecayFit fit = curvature_decay_stats(trace);
  CHECK_THAT(fit.rate, WithinAbs(-3.0, 0.01));
  CHECK(fit.r2 > 0.999);

  FlowTrace flat;
  for (int k = 0; k < 50; ++k) flat.samples.push_back({0.1 * k, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(curvature_decay_stats(flat), ArgumentError);
}
