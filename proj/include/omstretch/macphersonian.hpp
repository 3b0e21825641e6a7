#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omstretch/om_core.hpp"

namespace omstretch {

/// Largest ground set accepted by the enumerator.
inline constexpr int kMaxEnumerationElements = 6;

struct EnumerationOptions {
  std::uint64_t seed = 20240611;
  /// Configurations drawn per sampling round (half generic, half on an integer lattice).
  int samples_per_round = 400;
  /// Stop once this many consecutive rounds add nothing new.
  int stable_rounds = 3;
  int max_rounds = 200;
  /// Allow coincident points (parallel elements) in lattice samples.
  bool include_coincident = true;
};

/**
 * Acyclic oriented matroids on n elements in dimension d that arise from
 * point configurations: random generic and lattice configurations, closed
 * under relabeling, deduplicated, sorted. Throws UnsupportedError outside
 * 1 <= d, d + 2 <= n <= kMaxEnumerationElements.
 */
std::vector<OrientedMatroid> enumerate_acyclic_oms(int n, int d, const EnumerationOptions& options = {});

/// Matroids partially ordered by weak_map_leq.
class MatroidPoset {
 public:
  explicit MatroidPoset(std::vector<OrientedMatroid> elements);

  const std::vector<OrientedMatroid>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  /// elements[i] <= elements[j].
  bool leq(int i, int j) const { return leq_[i][j]; }
  bool less(int i, int j) const { return i != j && leq_[i][j]; }
  /// Covering pairs (i, j) with i < j in the order.
  std::vector<std::pair<int, int>> hasse_edges() const;
  std::vector<int> maximal_elements() const;
  /// Reflexive, antisymmetric and transitive.
  bool is_partial_order() const;

 private:
  std::vector<OrientedMatroid> elements_;
  std::vector<std::vector<bool>> leq_;
};

/// A finite simplicial complex, simplices as sorted vertex lists grouped by dimension.
class SimplicialComplex {
 public:
  /// Closes the given simplices under taking faces.
  static SimplicialComplex from_simplices(const std::vector<std::vector<int>>& simplices);

  const std::vector<std::vector<std::vector<int>>>& by_dimension() const { return by_dimension_; }
  int dimension() const { return static_cast<int>(by_dimension_.size()) - 1; }
  std::vector<int> f_vector() const;
  int euler_characteristic() const;
  /// Every face of every simplex is present.
  bool is_closed() const;

 private:
  std::vector<std::vector<std::vector<int>>> by_dimension_;
};

/// Simplices are the chains of the poset.
SimplicialComplex order_complex(const MatroidPoset& poset);

/// Betti numbers over GF(2), one per dimension 0..dim.
std::vector<int> gf2_betti(const SimplicialComplex& complex);

/// Identification of the uniform matroids on 4 points in the plane with the cells of Gamma_4 / +-.
struct CellStructureReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  int squares = 0;
  int triangles = 0;
  /// Each uniform matroid matches exactly one 2-face class and vice versa.
  bool bijection = false;
  /// Pairs (uniform matroid circuit, face label) as strings.
  std::vector<std::pair<std::string, std::string>> matches;
};

CellStructureReport cell_structure_m42(const EnumerationOptions& options = {});

}  // namespace omstretch
