#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "omstretch/errors.hpp"
#include "omstretch/om_core.hpp"
#include "oracles.hpp"

using namespace omstretch;

namespace {

PointConfiguration square() { return PointConfiguration(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
PointConfiguration triangle_with_interior() { return PointConfiguration(2, {{0, 0}, {2, 0}, {0, 2}, {0.5, 0.5}}); }

PointConfiguration regular_pentagon() {
  std::vector<std::vector<double>> pts;
  for (int k = 0; k < 5; ++k) {
    const double a = 2.0 * M_PI * k / 5.0;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  return PointConfiguration(2, pts);
}

}  // namespace

TEST_CASE("ground sets need room for a circuit") {
  CHECK_NOTHROW(GroundSet::make(4, 2));
  CHECK_THROWS_AS(GroundSet::make(3, 2), ArgumentError);
  CHECK_THROWS_AS(GroundSet::make(4, 0), ArgumentError);
}

TEST_CASE("circuits are stored with the smallest element positive") {
  const Circuit c({2, 3}, {1, 4});
  CHECK(c.positive() == ElementSet{1, 4});
  CHECK(c.negative() == ElementSet{2, 3});
  CHECK(Circuit({2, 3}, {1, 4}) == Circuit({1, 4}, {2, 3}));
  CHECK(c.oriented(Sign::kNegative) == SignedSet{{2, 3}, {1, 4}});
  CHECK_THROWS_AS(Circuit({1, 2}, {2}), ArgumentError);
  CHECK_THROWS_AS(Circuit({}, {}), ArgumentError);
}

TEST_CASE("signed circuit vertices come in antipodal pairs") {
  const auto v = SignedCircuitVertex::from_parts({4}, {1, 2, 3});
  CHECK(v.positive() == ElementSet{4});
  CHECK(v.orientation == Sign::kNegative);
  CHECK(v.antipode().positive() == ElementSet{1, 2, 3});
  CHECK(v.antipode().antipode() == v);
  CHECK(v != v.antipode());
}

TEST_CASE("oriented matroids reject circuits too large for their dimension") {
  CHECK_THROWS_AS(OrientedMatroid(GroundSet::make(5, 2), {Circuit({1, 2, 3}, {4, 5})}), ArgumentError);
  CHECK_THROWS_AS(OrientedMatroid(GroundSet::make(4, 2), {Circuit({1}, {5})}), ArgumentError);
}

TEST_CASE("square: the diagonals cross") {
  const OrientedMatroid m = circuits_of_points(square());
  REQUIRE(m.circuits().size() == 1);
  CHECK(m.circuits()[0] == Circuit({1, 4}, {2, 3}));
  CHECK(m.acyclic());
  CHECK(m.uniform());
}

TEST_CASE("triangle with an interior point") {
  const OrientedMatroid m = circuits_of_points(triangle_with_interior());
  REQUIRE(m.circuits().size() == 1);
  CHECK(m.circuits()[0] == Circuit({4}, {1, 2, 3}));
}

TEST_CASE("regular pentagon: one circuit per 4-subset") {
  const OrientedMatroid m = circuits_of_points(regular_pentagon());
  CHECK(m.circuits().size() == 5);
  for (const Circuit& c : m.circuits()) {
    CHECK(c.support().size() == 4);
    CHECK(c.positive().size() == 2);
  }
  CHECK(oracle::circuit_signs(m) == oracle::circuits_by_subsets(regular_pentagon().coordinates()));
}

TEST_CASE("collinear and coincident points give small circuits") {
  const OrientedMatroid collinear = circuits_of_points(PointConfiguration(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
  CHECK(collinear.contains(Circuit({1, 3}, {2})));
  CHECK_FALSE(collinear.uniform());
  const OrientedMatroid coincident = circuits_of_points(PointConfiguration(2, {{0, 0}, {1, 0}, {0, 1}, {0, 0}}));
  CHECK(coincident.contains(Circuit({1}, {4})));
  CHECK(check_circuit_axioms(coincident).ok());
}

TEST_CASE("configurations that do not span are rejected") {
  const PointConfiguration line(2, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK_FALSE(line.spans());
  CHECK_THROWS_AS(circuits_of_points(line), RankDeficientError);
  CHECK_THROWS_AS(PointConfiguration(2, {{0, 0}, {1}, {0, 1}, {1, 1}}), ArgumentError);
}

TEST_CASE("Radon partitions nest a circuit") {
  const OrientedMatroid m = circuits_of_points(square());
  CHECK(is_radon_partition(m, {1, 4}, {2, 3}));
  CHECK(is_radon_partition(m, {2, 3}, {1, 4}));
  CHECK_FALSE(is_radon_partition(m, {1, 2, 4}, {3}));
  CHECK_FALSE(is_radon_partition(m, {1, 4}, {2}));
  CHECK_THROWS_AS(is_radon_partition(m, {1, 2}, {2, 3}), ArgumentError);
}

TEST_CASE("weak maps between square, triangle and a collapsed configuration") {
  const OrientedMatroid sq = circuits_of_points(square());
  const OrientedMatroid tri = circuits_of_points(triangle_with_interior());
  CHECK(weak_map_leq(sq, sq));
  CHECK_FALSE(weak_map_leq(sq, tri));
  CHECK_FALSE(weak_map_leq(tri, sq));

  // Sliding point 4 of the triangle configuration onto the segment 2-3
  // specialises it: the degenerate matroid sits below the generic one.
  const OrientedMatroid collapsed = circuits_of_points(PointConfiguration(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}}));
  CHECK(collapsed.contains(Circuit({2, 3}, {4})));
  CHECK(weak_map_leq(collapsed, tri));
  CHECK_FALSE(weak_map_leq(tri, collapsed));

  CHECK_THROWS_AS(weak_map_leq(sq, circuits_of_points(regular_pentagon())), ArgumentError);
}

TEST_CASE("axiom checker flags each kind of violation") {
  const GroundSet g = GroundSet::make(4, 2);
  const std::vector<SignedSet> nested{{{1, 2}, {3}}, {{1, 2, 3}, {4}}};
  CHECK(check_circuit_axioms(g, nested).has(AxiomViolationKind::kSupportMinimality));

  const std::vector<SignedSet> duplicated{{{1}, {2}}, {{2}, {1}}};
  CHECK(check_circuit_axioms(g, duplicated).has(AxiomViolationKind::kSymmetry));

  // Two crossing circuits whose elimination on 2 has nothing to land on.
  const std::vector<SignedSet> no_elimination{{{1, 2}, {3}}, {{4}, {2}}};
  CHECK(check_circuit_axioms(g, no_elimination).has(AxiomViolationKind::kWeakElimination));

  const std::vector<SignedSet> malformed{{{1}, {1}}};
  CHECK(check_circuit_axioms(g, malformed).has(AxiomViolationKind::kMalformed));

  CHECK(check_circuit_axioms(circuits_of_points(square())).ok());
}

TEST_CASE("property: circuits match the subset oracle on random configurations") {
  gen::Rng rng(101);
  for (const auto& [n, d] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}, {4, 1}, {5, 1}}) {
    for (int trial = 0; trial < 30; ++trial) {
      const PointConfiguration config = trial % 2 == 0 ? gen::generic(n, d, rng) : gen::lattice(n, d, rng, d == 1 ? 7 : 3);
      const OrientedMatroid m = circuits_of_points(config);
      INFO("n=" << n << " d=" << d << " trial " << trial);
      CHECK(oracle::circuit_signs(m) == oracle::circuits_by_subsets(config.coordinates()));
      CHECK(m.acyclic());
      CHECK(check_circuit_axioms(m).ok());
      if (trial % 2 == 0) {
        CHECK(m.uniform());
        CHECK(static_cast<long>(m.circuits().size()) == static_cast<long>(subsets_of_size(n, d + 2).size()));
      }
    }
  }
}

TEST_CASE("property: circuits are affine invariants and follow relabelings") {
  gen::Rng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 4;
    const int d = 2 + trial % 2;
    if (n < d + 2) continue;
    const PointConfiguration config = trial % 3 == 0 ? gen::lattice(n, d, rng) : gen::generic(n, d, rng);
    const OrientedMatroid m = circuits_of_points(config);
    CHECK(circuits_of_points(gen::affine_image(config, rng)) == m);

    const std::vector<int> perm = gen::permutation(n, rng);
    Eigen::MatrixXd moved(d, n);
    for (int e = 1; e <= n; ++e) moved.col(perm[e - 1] - 1) = config.coordinates().col(e - 1);
    CHECK(circuits_of_points(PointConfiguration(moved)) == m.relabeled(perm));
  }
}

TEST_CASE("property: weak maps are reflexive and transitive on degenerations") {
  gen::Rng rng(303);
  std::vector<OrientedMatroid> pool;
  for (int trial = 0; trial < 40; ++trial) pool.push_back(circuits_of_points(gen::lattice(5, 2, rng)));
  for (int trial = 0; trial < 10; ++trial) pool.push_back(circuits_of_points(gen::generic(5, 2, rng)));
  for (const auto& a : pool) {
    CHECK(weak_map_leq(a, a));
    for (const auto& b : pool) {
      if (!weak_map_leq(a, b)) continue;
      if (weak_map_leq(b, a)) CHECK(a == b);
      for (const auto& c : pool) {
        if (weak_map_leq(b, c)) CHECK(weak_map_leq(a, c));
      }
    }
  }
}
