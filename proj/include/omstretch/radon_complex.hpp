#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omstretch/om_core.hpp"

namespace omstretch {

/// A closed cycle of the circuit graph lying in one 2-dimensional section.
struct Cycle {
  ElementSet support;         ///< union of the supports of its vertices
  std::vector<int> vertices;  ///< cyclic order
  std::vector<int> edge_ids;  ///< edge_ids[k] joins vertices[k] and vertices[k + 1 mod length]
};

/**
 * The circuit graph G(M): one vertex per signed circuit, edges between
 * circuits bounding a common 1-cell, and the partition of the edges into
 * cycles. Vertex 2k is circuit k in canonical orientation and 2k+1 its
 * antipode when built by this library, but consumers should use antipode().
 */
class CircuitGraph {
 public:
  using Edge = std::pair<int, int>;

  CircuitGraph() = default;
  CircuitGraph(std::vector<SignedCircuitVertex> vertices, std::vector<Edge> edges, std::vector<Cycle> cycles);

  const std::vector<SignedCircuitVertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  std::optional<int> index_of(const SignedCircuitVertex& v) const;
  /// Index of -v, or -1 when the antipode is missing.
  int antipode(int v) const { return antipode_.at(v); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  /// For each cycle through v, its two neighbours on that cycle.
  const std::vector<std::pair<int, int>>& opposite_pairs(int v) const { return opposite_.at(v); }

  /// Copy with one edge deleted; cycles through that edge are dropped.
  CircuitGraph without_edge(int edge_id) const;

 private:
  std::vector<SignedCircuitVertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Cycle> cycles_;
  std::map<SignedCircuitVertex, int> index_;
  std::vector<int> antipode_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<std::pair<int, int>>> opposite_;
};

/// A cell of dimension >= 2 of the Radon complex.
struct Cell {
  SignedSet signs;
  int dimension = 0;
  std::vector<int> vertices;  ///< graph vertices in its closure
};

/**
 * The Radon complex of a point configuration: the cell decomposition of
 * (K n 1^perp) n boundary(O_n) by coordinate sign patterns.
 */
struct RadonComplex {
  OrientedMatroid matroid;
  CircuitGraph graph;
  std::vector<Eigen::VectorXd> positions;  ///< natural coordinates on Gamma, per graph vertex
  std::vector<Cell> cells;                 ///< cells of dimension >= 2
  Eigen::MatrixXd dependences;             ///< orthonormal basis of K n 1^perp
  int sphere_dimension = 0;

  /// Cell counts by dimension; entries 0 and 1 come from the graph.
  std::vector<int> f_vector() const;
  int euler_characteristic() const;
  /// Vertex sets of the top-dimensional cells.
  std::vector<std::vector<int>> facets() const;
};

RadonComplex geometric_radon_complex(const PointConfiguration& config);

/**
 * Circuit graph built from the circuits alone. X and Y are adjacent when they
 * conform, X != -Y, and no other signed circuit conforms to X o Y. Edges are
 * grouped into cycles by supp(X) u supp(Y). Throws ArgumentError when m fails
 * check_circuit_axioms or a group is not a single cycle.
 */
CircuitGraph combinatorial_circuit_graph(const OrientedMatroid& m);

/// Throws ArgumentError when v is not a vertex of g.
std::vector<std::pair<int, int>> opposite_neighbors(const CircuitGraph& g, const SignedCircuitVertex& v);

/// Vertices, edges and cycles agree as sets of signed-circuit labels.
bool same_labeled_graph(const CircuitGraph& a, const CircuitGraph& b);

struct SphereReport {
  int expected_dimension = 0;
  int euler_characteristic = 0;
  int expected_euler_characteristic = 0;
  bool connected = true;
  bool even_degrees = true;
  bool antipodal = true;
  bool cycles_partition_edges = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

SphereReport validate_sphere(const RadonComplex& c, int n, int d);

}  // namespace omstretch
