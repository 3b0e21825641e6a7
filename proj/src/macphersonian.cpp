#include "omstretch/macphersonian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "omstretch/ambient.hpp"
#include "omstretch/errors.hpp"

namespace omstretch {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool has_coincident_points(const Eigen::MatrixXd& coords) {
  for (Eigen::Index a = 0; a < coords.cols(); ++a) {
    for (Eigen::Index b = a + 1; b < coords.cols(); ++b) {
      if (coords.col(a) == coords.col(b)) return true;
    }
  }
  return false;
}

using Bits = std::vector<std::uint64_t>;

// Rank over GF(2) of a matrix given by its columns as bitsets.
int gf2_rank(std::vector<Bits> columns) {
  std::map<std::size_t, Bits> pivots;  // lowest set bit -> reduced column
  int rank = 0;
  for (Bits& col : columns) {
    while (true) {
      std::size_t low = 0;
      bool nonzero = false;
      for (std::size_t w = col.size(); w-- > 0;) {
        if (col[w] != 0) {
          low = w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(col[w])));
          nonzero = true;
          break;
        }
      }
      if (!nonzero) break;
      auto it = pivots.find(low);
      if (it == pivots.end()) {
        pivots.emplace(low, col);
        ++rank;
        break;
      }
      for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= it->second[w];
    }
  }
  return rank;
}

}  // namespace

std::vector<OrientedMatroid> enumerate_acyclic_oms(int n, int d, const EnumerationOptions& options) {
  if (d < 1 || n < d + 2 || n > kMaxEnumerationElements) {
    throw UnsupportedError("enumeration supports 1 <= d, d + 2 <= n <= " + std::to_string(kMaxEnumerationElements) +
                           " (got n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
  }
  std::seed_seq seq{options.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> generic(-1.0, 1.0);
  const auto perms = all_permutations(n);

  std::set<OrientedMatroid> found;
  auto record = [&](const OrientedMatroid& m) {
    if (!m.acyclic() || found.count(m)) return;
    for (const auto& perm : perms) found.insert(m.relabeled(perm));
  };

  int quiet = 0;
  for (int round = 0; round < options.max_rounds && quiet < options.stable_rounds; ++round) {
    const std::size_t before = found.size();
    for (int i = 0; i < options.samples_per_round; ++i) {
      Eigen::MatrixXd coords(d, n);
      if (i % 2 == 0) {
        for (Eigen::Index k = 0; k < coords.size(); ++k) coords.data()[k] = generic(rng);
      } else {
        const int side = d == 1 ? n : (d == 2 ? 3 + (i / 2) % 2 : 3);
        std::uniform_int_distribution<int> lattice(0, side - 1);
        for (Eigen::Index k = 0; k < coords.size(); ++k) coords.data()[k] = lattice(rng);
        if (!options.include_coincident && has_coincident_points(coords)) continue;
      }
      const PointConfiguration config(coords);
      if (!config.spans()) continue;
      record(circuits_of_points(config));
    }
    quiet = found.size() == before ? quiet + 1 : 0;
  }
  return {found.begin(), found.end()};
}

MatroidPoset::MatroidPoset(std::vector<OrientedMatroid> elements) : elements_(std::move(elements)) {
  const int count = size();
  leq_.assign(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) leq_[i][j] = weak_map_leq(elements_[i], elements_[j]);
  }
}

std::vector<std::pair<int, int>> MatroidPoset::hasse_edges() const {
  std::vector<std::pair<int, int>> out;
  const int count = size();
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (!less(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < count && covered; ++k) covered = !(less(i, k) && less(k, j));
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<int> MatroidPoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size() && maximal; ++j) maximal = !less(i, j);
    if (maximal) out.push_back(i);
  }
  return out;
}

bool MatroidPoset::is_partial_order() const {
  const int count = size();
  for (int i = 0; i < count; ++i) {
    if (!leq_[i][i]) return false;
    for (int j = 0; j < count; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) return false;
      if (!leq_[i][j]) continue;
      for (int k = 0; k < count; ++k) {
        if (leq_[j][k] && !leq_[i][k]) return false;
      }
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<std::vector<int>>& simplices) {
  std::vector<std::set<std::vector<int>>> faces;
  for (std::vector<int> s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.size() > 20) throw ArgumentError("simplex too large to close under faces");
    const std::uint32_t limit = 1u << s.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      std::vector<int> face;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if ((mask >> k) & 1u) face.push_back(s[k]);
      }
      if (faces.size() < face.size()) faces.resize(face.size());
      faces[face.size() - 1].insert(std::move(face));
    }
  }
  SimplicialComplex c;
  for (auto& level : faces) c.by_dimension_.emplace_back(level.begin(), level.end());
  return c;
}

std::vector<int> SimplicialComplex::f_vector() const {
  std::vector<int> f;
  for (const auto& level : by_dimension_) f.push_back(static_cast<int>(level.size()));
  return f;
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0;
  for (std::size_t k = 0; k < by_dimension_.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<int>(by_dimension_[k].size());
  }
  return chi;
}

bool SimplicialComplex::is_closed() const {
  for (std::size_t k = 1; k < by_dimension_.size(); ++k) {
    for (const auto& simplex : by_dimension_[k]) {
      for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
        std::vector<int> face = simplex;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!std::binary_search(by_dimension_[k - 1].begin(), by_dimension_[k - 1].end(), face)) return false;
      }
    }
  }
  return true;
}

SimplicialComplex order_complex(const MatroidPoset& poset) {
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  auto extend = [&](auto&& self) -> void {
    chains.push_back(chain);
    for (int j = 0; j < poset.size(); ++j) {
      if (poset.less(chain.back(), j)) {
        chain.push_back(j);
        self(self);
        chain.pop_back();
      }
    }
  };
  for (int i = 0; i < poset.size(); ++i) {
    chain = {i};
    extend(extend);
  }
  return SimplicialComplex::from_simplices(chains);
}

std::vector<int> gf2_betti(const SimplicialComplex& complex) {
  const auto& levels = complex.by_dimension();
  const int top = complex.dimension();
  // rank[k] = rank of the boundary map from k-simplices to (k-1)-simplices.
  std::vector<int> rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& faces = levels[k - 1];
    const std::size_t words = (faces.size() + 63) / 64;
    std::vector<Bits> columns;
    columns.reserve(levels[k].size());
    for (const auto& simplex : levels[k]) {
      Bits col(words, 0);
      for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
        std::vector<int> face = simplex;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto it = std::lower_bound(faces.begin(), faces.end(), face);
        const auto row = static_cast<std::size_t>(it - faces.begin());
        col[row / 64] ^= std::uint64_t{1} << (row % 64);
      }
      columns.push_back(std::move(col));
    }
    rank[k] = gf2_rank(std::move(columns));
  }
  std::vector<int> betti;
  for (int k = 0; k <= top; ++k) betti.push_back(static_cast<int>(levels[k].size()) - rank[k] - rank[k + 1]);
  return betti;
}

CellStructureReport cell_structure_m42(const EnumerationOptions& options) {
  constexpr int n = 4;
  const AmbientSpace space(n);
  CellStructureReport report;

  // Faces of Gamma_4 are sign patterns with both parts nonempty; keep one per antipodal pair.
  std::vector<Circuit> two_faces;
  for (std::uint32_t pos = 1; pos < 16; ++pos) {
    for (std::uint32_t neg = 1; neg < 16; ++neg) {
      if (pos & neg) continue;
      const SignedSet label{ElementSet::from_bits(pos), ElementSet::from_bits(neg)};
      const Circuit face(label.pos, label.neg);
      if (face.signs() != label) continue;
      // The barycentre sits in the relative interior of the face it labels.
      if (face_of(barycenter(face, Sign::kPositive, space)) != label) {
        throw std::logic_error("barycentre left its face");
      }
      switch (label.support().size()) {
        case 2: ++report.vertices; break;
        case 3: ++report.edges; break;
        case 4:
          ++report.faces;
          two_faces.push_back(face);
          if (label.pos.size() == 2) ++report.squares;
          else ++report.triangles;
          break;
        default: break;
      }
    }
  }
  report.euler_characteristic = report.vertices - report.edges + report.faces;

  std::vector<OrientedMatroid> uniform;
  for (const OrientedMatroid& m : enumerate_acyclic_oms(n, 2, options)) {
    if (m.uniform()) uniform.push_back(m);
  }
  std::set<Circuit> unmatched(two_faces.begin(), two_faces.end());
  bool bijection = uniform.size() == two_faces.size();
  for (const OrientedMatroid& m : uniform) {
    const Circuit& c = m.circuits().front();
    if (m.circuits().size() != 1 || unmatched.erase(c) != 1) {
      bijection = false;
      continue;
    }
    report.matches.emplace_back(c.to_string(), c.signs().to_string());
  }
  report.bijection = bijection && unmatched.empty();
  return report;
}

}  // namespace omstretch
