#include <catch_amalgamated.hpp>

#include "omstretch/errors.hpp"
#include "omstretch/macphersonian.hpp"
#include "oracles.hpp"

using namespace omstretch;

namespace {

std::vector<std::vector<int>> hemi_icosahedron() {
  return {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
          {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
}

const std::vector<OrientedMatroid>& m42() {
  static const std::vector<OrientedMatroid> all = enumerate_acyclic_oms(4, 2);
  return all;
}

}  // namespace

TEST_CASE("GF(2) Betti numbers of standard complexes") {
  const auto circle = SimplicialComplex::from_simplices({{1, 2}, {2, 3}, {1, 3}});
  CHECK(gf2_betti(circle) == std::vector<int>{1, 1});

  const auto sphere = SimplicialComplex::from_simplices({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(gf2_betti(sphere) == std::vector<int>{1, 0, 1});
  CHECK(sphere.euler_characteristic() == 2);

  const auto rp2 = SimplicialComplex::from_simplices(hemi_icosahedron());
  CHECK(rp2.f_vector() == std::vector<int>{6, 15, 10});
  CHECK(rp2.euler_characteristic() == 1);
  CHECK(gf2_betti(rp2) == std::vector<int>{1, 1, 1});

  const auto two_points = SimplicialComplex::from_simplices({{1}, {2}});
  CHECK(gf2_betti(two_points) == std::vector<int>{2});

  const auto disk = SimplicialComplex::from_simplices({{1, 2, 3}});
  CHECK(disk.is_closed());
  CHECK(gf2_betti(disk) == std::vector<int>{1, 0, 0});
}

TEST_CASE("uniform matroids on four points in the plane") {
  int squares = 0;
  int triangles = 0;
  for (const OrientedMatroid& m : m42()) {
    CHECK(m.acyclic());
    CHECK(check_circuit_axioms(m).ok());
    if (!m.uniform()) continue;
    REQUIRE(m.circuits().size() == 1);
    const Circuit& c = m.circuits()[0];
    (c.positive().size() == 2 ? squares : triangles)++;
  }
  CHECK(squares == 3);
  CHECK(triangles == 4);
}

TEST_CASE("the poset of four points in the plane is a projective plane") {
  // 7 uniform, 12 with a collinear triple, 6 with a coincident pair.
  CHECK(m42().size() == 25);
  const MatroidPoset poset(m42());
  CHECK(poset.is_partial_order());
  std::vector<int> uniform;
  for (int i = 0; i < poset.size(); ++i) {
    if (poset.elements()[i].uniform()) uniform.push_back(i);
  }
  CHECK(poset.maximal_elements() == uniform);

  const SimplicialComplex complex = order_complex(poset);
  CHECK(complex.is_closed());
  CHECK(complex.f_vector() == std::vector<int>{25, 72, 48});
  CHECK(complex.euler_characteristic() == 1);
  CHECK(gf2_betti(complex) == std::vector<int>{1, 1, 1});
}

TEST_CASE("without coincident points the uniform part is unchanged") {
  EnumerationOptions options;
  options.include_coincident = false;
  const auto all = enumerate_acyclic_oms(4, 2, options);
  CHECK(all.size() == 19);
  int uniform = 0;
  for (const auto& m : all) uniform += m.uniform() ? 1 : 0;
  CHECK(uniform == 7);
}

TEST_CASE("cell structure of Gamma_4 modulo antipodes") {
  const CellStructureReport r = cell_structure_m42();
  CHECK(r.vertices == 6);
  CHECK(r.edges == 12);
  CHECK(r.faces == 7);
  CHECK(r.euler_characteristic == 1);
  CHECK(r.squares == 3);
  CHECK(r.triangles == 4);
  CHECK(r.bijection);
  CHECK(r.matches.size() == 7);
}

TEST_CASE("sampled uniform matroids on five points match the exhaustive search") {
  std::set<std::vector<SignedSet>> sampled;
  for (const OrientedMatroid& m : enumerate_acyclic_oms(5, 2)) {
    if (!m.uniform()) continue;
    std::vector<SignedSet> circuits;
    for (const Circuit& c : m.circuits()) circuits.push_back(c.signs());
    sampled.insert(circuits);
  }
  const auto exhaustive = oracle::exhaustive_uniform_5_2();
  CHECK(sampled.size() == exhaustive.size());
  CHECK(sampled == exhaustive);
}

TEST_CASE("order complexes of small posets") {
  std::vector<OrientedMatroid> uniform;
  for (const auto& m : m42()) {
    if (m.uniform()) uniform.push_back(m);
  }
  const SimplicialComplex antichain = order_complex(MatroidPoset(uniform));
  CHECK(antichain.f_vector() == std::vector<int>{7});

  const MatroidPoset full(m42());
  std::vector<int> chain;
  for (int i = 0; i < full.size() && chain.empty(); ++i) {
    for (int j = 0; j < full.size() && chain.empty(); ++j) {
      for (int k = 0; k < full.size() && chain.empty(); ++k) {
        if (full.less(i, j) && full.less(j, k)) chain = {i, j, k};
      }
    }
  }
  REQUIRE(chain.size() == 3);
  std::vector<OrientedMatroid> three;
  for (int i : chain) three.push_back(full.elements()[i]);
  const SimplicialComplex triangle = order_complex(MatroidPoset(three));
  CHECK(triangle.f_vector() == std::vector<int>{3, 3, 1});
}

TEST_CASE("enumeration range guard") {
  CHECK_THROWS_AS(enumerate_acyclic_oms(7, 2), UnsupportedError);
  CHECK_THROWS_AS(enumerate_acyclic_oms(3, 2), UnsupportedError);
  CHECK_NOTHROW(enumerate_acyclic_oms(4, 1));
}
