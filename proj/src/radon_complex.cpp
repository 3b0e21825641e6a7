#include "omstretch/radon_complex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "omstretch/ambient.hpp"
#include "omstretch/errors.hpp"
#include "omstretch/linalg.hpp"

namespace omstretch {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

// Rotate so the smallest vertex comes first, travelling towards its smaller neighbour.
std::vector<int> normalize_cycle(std::vector<int> ring) {
  auto first = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), first, ring.end());
  if (ring.size() > 2 && ring.back() < ring[1]) std::reverse(ring.begin() + 1, ring.end());
  return ring;
}

Cycle make_cycle(ElementSet support, std::vector<int> ring, const std::map<EdgeKey, int>& edge_ids) {
  Cycle c{support, normalize_cycle(std::move(ring)), {}};
  for (std::size_t k = 0; k < c.vertices.size(); ++k) {
    const int a = c.vertices[k];
    const int b = c.vertices[(k + 1) % c.vertices.size()];
    c.edge_ids.push_back(edge_ids.at(edge_key(a, b)));
  }
  return c;
}

std::vector<SignedCircuitVertex> signed_vertices(const OrientedMatroid& m) {
  std::vector<SignedCircuitVertex> out;
  out.reserve(2 * m.circuits().size());
  for (const Circuit& c : m.circuits()) {
    out.push_back({c, Sign::kPositive});
    out.push_back({c, Sign::kNegative});
  }
  return out;
}

bool cycle_sort(const Cycle& a, const Cycle& b) { return a.support < b.support; }

}  // namespace

CircuitGraph::CircuitGraph(std::vector<SignedCircuitVertex> vertices, std::vector<Edge> edges,
                           std::vector<Cycle> cycles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), cycles_(std::move(cycles)) {
  const int count = vertex_count();
  for (int v = 0; v < count; ++v) {
    if (!index_.emplace(vertices_[v], v).second) {
      throw ArgumentError("duplicate circuit-graph vertex " + vertices_[v].to_string());
    }
  }
  antipode_.assign(count, -1);
  for (int v = 0; v < count; ++v) {
    if (auto it = index_.find(vertices_[v].antipode()); it != index_.end()) antipode_[v] = it->second;
  }

  adjacency_.assign(count, {});
  for (Edge& e : edges_) {
    if (e.first < 0 || e.second < 0 || e.first >= count || e.second >= count || e.first == e.second) {
      throw ArgumentError("invalid circuit-graph edge");
    }
    e = edge_key(e.first, e.second);
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  opposite_.assign(count, {});
  for (const Cycle& c : cycles_) {
    const std::size_t len = c.vertices.size();
    if (len < 3 || c.edge_ids.size() != len) throw ArgumentError("malformed cycle on " + c.support.to_string());
    for (std::size_t k = 0; k < len; ++k) {
      const int v = c.vertices[k];
      const int next = c.vertices[(k + 1) % len];
      const int prev = c.vertices[(k + len - 1) % len];
      const int id = c.edge_ids[k];
      if (id < 0 || id >= static_cast<int>(edges_.size()) || edges_[id] != edge_key(v, next)) {
        throw ArgumentError("cycle on " + c.support.to_string() + " references a missing edge");
      }
      opposite_[v].emplace_back(prev, next);
    }
  }
}

std::optional<int> CircuitGraph::index_of(const SignedCircuitVertex& v) const {
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  return std::nullopt;
}

CircuitGraph CircuitGraph::without_edge(int edge_id) const {
  if (edge_id < 0 || edge_id >= static_cast<int>(edges_.size())) throw ArgumentError("edge id out of range");
  std::vector<Edge> edges;
  std::vector<int> remap(edges_.size(), -1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    if (e == edge_id) continue;
    remap[e] = static_cast<int>(edges.size());
    edges.push_back(edges_[e]);
  }
  std::vector<Cycle> cycles;
  for (const Cycle& c : cycles_) {
    if (std::find(c.edge_ids.begin(), c.edge_ids.end(), edge_id) != c.edge_ids.end()) continue;
    Cycle copy = c;
    for (int& id : copy.edge_ids) id = remap[id];
    cycles.push_back(std::move(copy));
  }
  return CircuitGraph(vertices_, std::move(edges), std::move(cycles));
}

std::vector<int> RadonComplex::f_vector() const {
  std::vector<int> f = {graph.vertex_count(), static_cast<int>(graph.edges().size())};
  for (const Cell& c : cells) {
    if (static_cast<int>(f.size()) <= c.dimension) f.resize(c.dimension + 1, 0);
    ++f[c.dimension];
  }
  if (sphere_dimension == 0 && f[1] == 0) f.resize(1);
  return f;
}

int RadonComplex::euler_characteristic() const {
  const std::vector<int> f = f_vector();
  int chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f[k];
  return chi;
}

std::vector<std::vector<int>> RadonComplex::facets() const {
  std::vector<std::vector<int>> out;
  if (sphere_dimension == 0) {
    for (int v = 0; v < graph.vertex_count(); ++v) out.push_back({v});
  } else if (sphere_dimension == 1) {
    for (const auto& [a, b] : graph.edges()) out.push_back({a, b});
  } else {
    for (const Cell& c : cells) {
      if (c.dimension == sphere_dimension) out.push_back(c.vertices);
    }
  }
  return out;
}

RadonComplex geometric_radon_complex(const PointConfiguration& config) {
  const int n = config.n();
  const Eigen::MatrixXd kernel = dependence_space(config);
  const std::vector<ElementaryVector> elementary = elementary_vectors(kernel, kSignTolerance);

  std::vector<Circuit> circuits;
  for (const ElementaryVector& e : elementary) circuits.emplace_back(e.signs.pos, e.signs.neg);
  OrientedMatroid matroid(GroundSet::make(n, config.d()), circuits);
  std::vector<SignedCircuitVertex> vertices = signed_vertices(matroid);

  // elementary_vectors and the matroid share the canonical sort order.
  std::vector<Eigen::VectorXd> positions;
  std::vector<SignedSet> vertex_signs;
  for (const ElementaryVector& e : elementary) {
    const Eigen::VectorXd p = project_to_gamma(e.vector).coords();
    positions.push_back(p);
    positions.push_back(-p);
    vertex_signs.push_back(e.signs);
    vertex_signs.push_back(e.signs.negated());
  }

  // Every 2-dimensional coordinate section K_S is a polygon: its rays, in angular order.
  std::vector<CircuitGraph::Edge> edges;
  std::map<EdgeKey, int> edge_ids;
  std::vector<std::pair<ElementSet, std::vector<int>>> rings;
  for (int size = 3; size <= n; ++size) {
    for (ElementSet s : subsets_of_size(n, size)) {
      const Eigen::MatrixXd plane = restrict_to_support(kernel, s);
      if (plane.cols() != 2) continue;
      ElementSet closure;
      for (int k = 0; k < n; ++k) {
        if (plane.row(k).norm() > kRankTolerance) closure.insert(k + 1);
      }
      if (closure != s) continue;

      std::vector<std::pair<double, int>> rays;
      for (int v = 0; v < static_cast<int>(positions.size()); ++v) {
        if (!vertex_signs[v].support().is_subset_of(s)) continue;
        const Eigen::Vector2d coords = plane.transpose() * positions[v];
        rays.emplace_back(std::atan2(coords(1), coords(0)), v);
      }
      std::sort(rays.begin(), rays.end());
      std::vector<int> ring;
      for (const auto& ray : rays) ring.push_back(ray.second);
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const EdgeKey key = edge_key(ring[k], ring[(k + 1) % ring.size()]);
        if (edge_ids.emplace(key, static_cast<int>(edges.size())).second) edges.push_back(key);
      }
      rings.emplace_back(s, std::move(ring));
    }
  }
  std::vector<Cycle> cycles;
  for (auto& [support, ring] : rings) cycles.push_back(make_cycle(support, std::move(ring), edge_ids));
  std::sort(cycles.begin(), cycles.end(), cycle_sort);

  // All cells: sign vectors of K, generated as conformal sums of elementary vectors.
  std::map<ElementSet, int> section_dimension;
  auto dimension_of = [&](ElementSet support) {
    auto it = section_dimension.find(support);
    if (it == section_dimension.end()) {
      it = section_dimension.emplace(support, static_cast<int>(restrict_to_support(kernel, support).cols())).first;
    }
    return it->second;
  };
  std::map<SignedSet, Eigen::VectorXd> vectors;
  std::deque<SignedSet> queue;
  for (std::size_t v = 0; v < positions.size(); ++v) {
    vectors.emplace(vertex_signs[v], positions[v]);
    queue.push_back(vertex_signs[v]);
  }
  while (!queue.empty()) {
    const SignedSet sigma = queue.front();
    queue.pop_front();
    const Eigen::VectorXd witness = vectors.at(sigma);
    for (std::size_t v = 0; v < positions.size(); ++v) {
      const SignedSet& x = vertex_signs[v];
      if (!x.conforms_with(sigma) || x.conformal_below(sigma)) continue;
      const SignedSet tau = sigma.composed_with(x);
      if (vectors.count(tau)) continue;
      Eigen::VectorXd sum = witness + positions[v];
      if (sign_vector(sum / sum.cwiseAbs().maxCoeff(), kSignTolerance) != tau) {
        throw std::logic_error("conformal sum does not realise its composed sign vector");
      }
      vectors.emplace(tau, std::move(sum));
      queue.push_back(tau);
    }
  }

  std::vector<Cell> cells;
  int one_cells = 0;
  for (const auto& [sigma, witness] : vectors) {
    const int dim = dimension_of(sigma.support()) - 1;
    if (dim == 1) ++one_cells;
    if (dim < 2) continue;
    Cell cell{sigma, dim, {}};
    for (int v = 0; v < static_cast<int>(vertex_signs.size()); ++v) {
      if (vertex_signs[v].conformal_below(sigma)) cell.vertices.push_back(v);
    }
    cells.push_back(std::move(cell));
  }
  if (one_cells != static_cast<int>(edges.size())) {
    throw std::logic_error("sector edges and 1-cells of the Radon complex disagree");
  }

  CircuitGraph graph(std::move(vertices), std::move(edges), std::move(cycles));
  const int sphere_dimension = static_cast<int>(kernel.cols()) - 1;
  return RadonComplex{std::move(matroid), std::move(graph), std::move(positions), std::move(cells), kernel,
                      sphere_dimension};
}

CircuitGraph combinatorial_circuit_graph(const OrientedMatroid& m) {
  const AxiomReport report = check_circuit_axioms(m);
  if (!report.ok()) {
    throw ArgumentError("matroid fails the circuit axioms (" + to_string(report.violations.front().kind) +
                        ": " + report.violations.front().detail + ")");
  }
  std::vector<SignedCircuitVertex> vertices = signed_vertices(m);
  const int count = static_cast<int>(vertices.size());
  std::vector<SignedSet> signs;
  for (const auto& v : vertices) signs.push_back(v.signs());

  std::vector<CircuitGraph::Edge> edges;
  std::map<EdgeKey, int> edge_ids;
  std::map<ElementSet, std::vector<int>> groups;
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const SignedSet& x = signs[a];
      const SignedSet& y = signs[b];
      if (!x.conforms_with(y) || x == y.negated()) continue;
      const SignedSet joined = x.composed_with(y);
      bool blocked = false;
      for (int z = 0; z < count && !blocked; ++z) {
        blocked = z != a && z != b && signs[z].conformal_below(joined);
      }
      if (blocked) continue;
      const int id = static_cast<int>(edges.size());
      edges.emplace_back(a, b);
      edge_ids.emplace(EdgeKey{a, b}, id);
      groups[x.support() | y.support()].push_back(id);
    }
  }

  std::vector<Cycle> cycles;
  for (const auto& [support, ids] : groups) {
    std::map<int, std::vector<int>> local;
    for (int id : ids) {
      local[edges[id].first].push_back(edges[id].second);
      local[edges[id].second].push_back(edges[id].first);
    }
    for (const auto& [v, nbrs] : local) {
      if (nbrs.size() != 2) {
        throw ArgumentError("edges tagged " + support.to_string() + " do not form a cycle at " +
                            vertices[v].to_string());
      }
    }
    std::vector<int> ring;
    int prev = -1;
    int current = local.begin()->first;
    do {
      ring.push_back(current);
      const auto& nbrs = local.at(current);
      const int next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
      prev = current;
      current = next;
    } while (current != ring.front());
    if (ring.size() != ids.size()) {
      throw ArgumentError("edges tagged " + support.to_string() + " split into several cycles");
    }
    cycles.push_back(make_cycle(support, std::move(ring), edge_ids));
  }
  std::sort(cycles.begin(), cycles.end(), cycle_sort);
  return CircuitGraph(std::move(vertices), std::move(edges), std::move(cycles));
}

std::vector<std::pair<int, int>> opposite_neighbors(const CircuitGraph& g, const SignedCircuitVertex& v) {
  const auto index = g.index_of(v);
  if (!index) throw ArgumentError("vertex " + v.to_string() + " is not in the circuit graph");
  return g.opposite_pairs(*index);
}

bool same_labeled_graph(const CircuitGraph& a, const CircuitGraph& b) {
  using LabelEdge = std::pair<SignedCircuitVertex, SignedCircuitVertex>;
  auto label_edge = [](const CircuitGraph& g, int id) {
    const auto& [x, y] = g.edges()[id];
    const auto& vx = g.vertices()[x];
    const auto& vy = g.vertices()[y];
    return vx < vy ? LabelEdge{vx, vy} : LabelEdge{vy, vx};
  };
  auto summarize = [&](const CircuitGraph& g) {
    std::set<SignedCircuitVertex> vertices(g.vertices().begin(), g.vertices().end());
    std::set<LabelEdge> edges;
    for (int id = 0; id < static_cast<int>(g.edges().size()); ++id) edges.insert(label_edge(g, id));
    std::set<std::pair<ElementSet, std::set<LabelEdge>>> cycles;
    for (const Cycle& c : g.cycles()) {
      std::set<LabelEdge> cycle_edges;
      for (int id : c.edge_ids) cycle_edges.insert(label_edge(g, id));
      cycles.emplace(c.support, std::move(cycle_edges));
    }
    return std::make_tuple(std::move(vertices), std::move(edges), std::move(cycles));
  };
  return summarize(a) == summarize(b);
}

SphereReport validate_sphere(const RadonComplex& c, int n, int d) {
  SphereReport r;
  const CircuitGraph& g = c.graph;
  r.expected_dimension = n - d - 2;
  r.expected_euler_characteristic = 1 + (r.expected_dimension % 2 == 0 ? 1 : -1);
  r.euler_characteristic = c.euler_characteristic();
  if (c.sphere_dimension != r.expected_dimension) {
    r.failures.push_back("complex has dimension " + std::to_string(c.sphere_dimension) + ", expected " +
                         std::to_string(r.expected_dimension));
  }
  if (r.euler_characteristic != r.expected_euler_characteristic) {
    r.failures.push_back("Euler characteristic " + std::to_string(r.euler_characteristic) + ", expected " +
                         std::to_string(r.expected_euler_characteristic));
  }

  const int count = g.vertex_count();
  for (int v = 0; v < count; ++v) {
    if (g.degree(v) % 2 != 0) r.even_degrees = false;
  }
  if (!r.even_degrees) r.failures.push_back("some vertex has odd degree");

  std::set<CircuitGraph::Edge> edge_set(g.edges().begin(), g.edges().end());
  for (int v = 0; v < count && r.antipodal; ++v) r.antipodal = g.antipode(v) >= 0;
  for (const auto& [a, b] : g.edges()) {
    if (!r.antipodal) break;
    const int x = g.antipode(a);
    const int y = g.antipode(b);
    r.antipodal = edge_set.count(x < y ? CircuitGraph::Edge{x, y} : CircuitGraph::Edge{y, x}) > 0;
  }
  if (!r.antipodal) r.failures.push_back("antipodal map is not a graph automorphism");

  std::vector<int> covered(g.edges().size(), 0);
  for (const Cycle& cycle : g.cycles()) {
    for (int id : cycle.edge_ids) ++covered[id];
  }
  r.cycles_partition_edges = std::all_of(covered.begin(), covered.end(), [](int k) { return k == 1; });
  if (!r.cycles_partition_edges) r.failures.push_back("cycles do not partition the edges");

  if (r.expected_dimension >= 1 && count > 0) {
    std::vector<bool> seen(count, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    r.connected = reached == count;
    if (!r.connected) r.failures.push_back("circuit graph is disconnected");
  }
  return r;
}

}  // namespace omstretch
